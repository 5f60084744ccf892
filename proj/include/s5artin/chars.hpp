#pragma once

#include <map>
#include <string>
#include <vector>

#include "s5artin/cyc.hpp"
#include "s5artin/groups.hpp"

namespace s5artin {

/// Class function on a concrete group, values indexed by conjugacy class.
class Character {
 public:
  Character() = default;
  Character(GroupPtr group, std::vector<Cyc> values);
  static Character trivial(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyc>& values() const { return values_; }
  const Cyc& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const { return values_.size(); }

  /// Value at the identity class as an integer; throws DomainError if it is
  /// not a positive rational integer.
  int degree() const;
  bool is_linear() const { return degree() == 1; }

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  /// Tensor product.
  Character operator*(const Character& o) const;
  Character scaled(const Rat& r) const;
  Character conj() const;
  /// n-th tensor power; negative n is allowed for linear characters only.
  Character power(long n) const;

  /// Values as seen through a permutation of the classes: out[c] = this[perm[c]].
  Character permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Character& a, const Character& b);

  /// First class where the two differ, if any (same group required).
  friend std::optional<std::size_t> first_difference(const Character& a, const Character& b);

 private:
  void require_same_group(const Character& o) const;

  GroupPtr group_;
  std::vector<Cyc> values_;
};

/// Multiset of roots of unity, stored as exponents of z = zeta_120 in [0, 120).
class EigenMultiset {
 public:
  EigenMultiset() = default;
  explicit EigenMultiset(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  std::vector<Cyc> values() const;
  Cyc sum() const;
  /// Product as an exponent of z.
  int product_exponent() const;
  /// Multiply every element by z^k.
  EigenMultiset scaled(int k) const;
  EigenMultiset negated() const { return scaled(60); }
  std::map<int, int> multiplicities() const;
  /// "{z^0, z^60, ...}"
  std::string str() const;

  friend bool operator==(const EigenMultiset&, const EigenMultiset&) = default;
  friend auto operator<=>(const EigenMultiset&, const EigenMultiset&) = default;

 private:
  std::vector<int> exps_;
};

/// Irreducible characters by Dixon's method: class-algebra structure constants
/// are diagonalised simultaneously over F_241 (241 = 1 mod 120), and every
/// value is lifted to Q(zeta_120) through its eigenvalue multiplicities.
/// Rows are sorted by degree, then lexicographically on values.
/// Throws InconsistencyError if the eigenspaces fail to split, DomainError if
/// the group exponent does not divide 120.
std::vector<Character> character_table(const GroupPtr& g);

/// (1/|G|) sum_c |c| a(c) conj(b(c)). Throws DomainError on group mismatch or
/// a non-rational result.
Rat inner(const Character& a, const Character& b);

/// Sym^k for 0 <= k <= 4 via Newton's identities on power maps.
Character sym_power(const Character& a, int k);
/// Exterior power for 0 <= k <= 2.
Character ext_power(const Character& a, int k);

/// Pulls `a` back along a class map whose target is a's group.
/// Throws DomainError if the map does not land in a's group.
Character pullback(const Character& a, const ClassMap& map);
/// Restriction to a subgroup along its inclusion map.
inline Character restrict(const Character& a, const ClassMap& inclusion) {
  return pullback(a, inclusion);
}

/// Irreducibles of the parent whose restriction is `a`. `inclusion` embeds
/// a's group as an index-2 subgroup; `parent_table` is the parent's table.
/// Throws DomainError if the index is not 2 or `a` is not irreducible.
std::vector<Character> extensions_of(const Character& a, const ClassMap& inclusion,
                                     const std::vector<Character>& parent_table);

/// Frobenius-Schur indicator of an irreducible character: +1, 0 or -1.
int fs_indicator(const Character& a);
/// Twisted indicator (1/|G|) sum a(g^2) conj(mu(g)) for a linear similitude mu:
/// +1 or -1 when a carries an orthogonal or symplectic pairing with values in mu.
int fs_indicator(const Character& a, const Character& similitude);

/// Eigenvalues of a representation affording `a` on class `c`, by the
/// multiplicity formula over the cyclic group generated by a representative.
/// Throws InconsistencyError on negative or non-integral multiplicities.
EigenMultiset eigenvalues(const Character& a, std::size_t c);

/// Permutation character of g acting on the cosets of h (h's elements lie in g).
Character induced_perm_char(const GroupPtr& g, const GroupPtr& h);

/// Permutation of the classes of `h` induced by conjugation with `t` (an
/// element of an overgroup normalising h).
std::vector<std::size_t> conjugation_class_action(const GroupPtr& h, const GroupElem& t);

}  // namespace s5artin
