#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "s5artin/finite_field.hpp"

namespace s5artin {

/// 2x2 matrix over F5, entries row-major [[a, b], [c, d]].
class Mat2F5 {
 public:
  Mat2F5(int a, int b, int c, int d);
  static Mat2F5 identity() { return {1, 0, 0, 1}; }
  static Mat2F5 scalar(int s) { return {s, 0, 0, s}; }

  int at(int i) const { return e_[i]; }
  FpElem det() const;
  bool is_scalar() const { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }

  Mat2F5 operator*(const Mat2F5& o) const;
  Mat2F5 inverse() const;

  friend auto operator<=>(const Mat2F5&, const Mat2F5&) = default;
  std::string str() const;

 private:
  std::array<std::uint8_t, 4> e_;
};

/// Permutation of {0, ..., n-1}, n <= 12. Product is composition: (a*b)(x) = a(b(x)).
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return n_; }
  int operator()(int x) const { return img_[x]; }
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  /// Cycle lengths, ascending (fixed points included).
  std::vector<int> cycle_type() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  std::string str() const;

 private:
  std::array<std::uint8_t, 12> img_{};
  std::uint8_t n_ = 0;
};

/// Element of a concrete finite group: a matrix over F5 or a permutation.
class GroupElem {
 public:
  GroupElem() : v_(Mat2F5::identity()) {}
  GroupElem(Mat2F5 m) : v_(m) {}  // NOLINT(google-explicit-constructor)
  GroupElem(Perm p) : v_(p) {}    // NOLINT(google-explicit-constructor)

  bool is_matrix() const { return std::holds_alternative<Mat2F5>(v_); }
  const Mat2F5& matrix() const;
  const Perm& perm() const;

  GroupElem operator*(const GroupElem& o) const;
  GroupElem inverse() const;
  bool is_identity() const;
  std::uint64_t key() const;

  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
  std::string str() const;

 private:
  std::variant<Mat2F5, Perm> v_;
};

struct ConjugacyClass {
  std::size_t representative;  // lexicographically least member
  std::size_t size;
  int order;                   // element order
  std::vector<std::size_t> members;
};

/// Fully enumerated finite group with multiplication table, conjugacy
/// classes and power maps. Element indices follow the lexicographic order of
/// the elements; class 0 is the identity, remaining classes are sorted by
/// (element order, class size, representative).
class Group {
 public:
  static std::shared_ptr<const Group> generate(std::string name,
                                               const std::vector<GroupElem>& generators);
  /// Builds from an explicit element list; throws DomainError unless it is closed.
  static std::shared_ptr<const Group> from_elements(std::string name,
                                                    std::vector<GroupElem> elements);

  const std::string& name() const { return name_; }
  std::size_t order() const { return elems_.size(); }
  const GroupElem& element(std::size_t i) const { return elems_[i]; }
  const std::vector<GroupElem>& elements() const { return elems_; }
  std::optional<std::size_t> find(const GroupElem& g) const;
  std::size_t index_of(const GroupElem& g) const;

  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * elems_.size() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t pow(std::size_t a, long k) const;
  std::size_t conjugate(std::size_t g, std::size_t by) const { return mul(mul(by, g), inv(by)); }
  int element_order(std::size_t a) const { return orders_[a]; }
  /// lcm of element orders.
  int exponent() const;

  std::size_t num_classes() const { return classes_.size(); }
  const ConjugacyClass& cls(std::size_t c) const { return classes_[c]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t elem) const { return class_of_[elem]; }
  /// Class of g^k for g in class c.
  std::size_t power_class(std::size_t c, long k) const;
  /// Class of g^-1 for g in class c.
  std::size_t inverse_class(std::size_t c) const { return power_class(c, -1); }

  std::vector<std::size_t> center() const;
  bool contains_all(const std::vector<GroupElem>& gs) const;

 private:
  Group() = default;
  void build(std::vector<GroupElem> elements);

  std::string name_;
  std::vector<GroupElem> elems_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::uint16_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<int> orders_;
  std::size_t identity_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> power_;  // power_[c][k], k < order
};

using GroupPtr = std::shared_ptr<const Group>;

/// Class-level shadow of a group homomorphism (inclusion or projection).
struct ClassMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<std::size_t> element_map;  // source element -> target element
  std::vector<std::size_t> class_map;    // source class -> target class
};

/// Inclusion of `sub` into `parent`; throws DomainError if some element is missing.
ClassMap make_inclusion(const GroupPtr& sub, const GroupPtr& parent);
/// Map induced by `f`; throws DomainError if the image is not a class function.
ClassMap make_homomorphism(const GroupPtr& source, const GroupPtr& target,
                           const std::function<GroupElem(const GroupElem&)>& f);

/// Label of a conjugacy class of S5 = PGL2(F5).
struct ClassLabel {
  std::string name;  // 1, 2A, 2B, 3A, 4A, 5A, 6A
  int order;
  int parity;        // +1 even, -1 odd

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// The seven labels in the order of the S5 character table header.
const std::vector<ClassLabel>& s5_labels();
/// Sizes of the seven S5 classes, aligned with s5_labels().
const std::vector<int>& s5_class_sizes();
/// Lookup by (order, parity); throws DomainError for pairs outside the dictionary.
const ClassLabel& label_from_order_parity(int order, int parity);
const ClassLabel& label_by_name(const std::string& name);
/// Position of a label within s5_labels().
std::size_t label_index(const ClassLabel& label);

std::shared_ptr<const Group> build_gl2f5();
/// Determinant-square subgroup N.A5 of GL2(F5). Throws DomainError for other input.
std::shared_ptr<const Group> subgroup_na5(const GroupPtr& gl2);
/// Scalar matrices (the centre Delta).
std::shared_ptr<const Group> subgroup_scalars(const GroupPtr& gl2);
/// Label of the image of m in PGL2(F5) = S5, from (projective order, det squareness).
const ClassLabel& pgl_class_label(const Mat2F5& m);
/// Cycle type (multiset of parts summing to 5) to S5 class label.
const ClassLabel& cycle_type_label(std::vector<int> partition);
/// Lexicographically least element with non-square determinant.
GroupElem outer_transversal(const GroupPtr& gl2);

/// Action of m on the projective line P^1(F5): points 0..4 are [x:1], 5 is [1:0].
Perm projective_line_action(const Mat2F5& m);
/// Image of GL2(F5) in Sym(P^1(F5)), i.e. PGL2(F5) = S5, together with the projection.
struct ProjectiveImage {
  GroupPtr pgl;
  ClassMap projection;
  std::vector<ClassLabel> labels;  // per class of pgl
};
ProjectiveImage build_pgl2f5(const GroupPtr& gl2);

/// Trivial group (identity permutation on one point).
std::shared_ptr<const Group> trivial_group();

/// Subgroup of `g` cut out by a predicate on elements.
std::shared_ptr<const Group> subgroup_where(const GroupPtr& g, std::string name,
                                           const std::function<bool(const GroupElem&)>& keep);

}  // namespace s5artin
