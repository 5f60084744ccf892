#include "s5artin/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "s5artin/error.hpp"

namespace s5artin {

// ---------------------------------------------------------------- Mat2F5

Mat2F5::Mat2F5(int a, int b, int c, int d) {
  auto r = [](int x) { return static_cast<std::uint8_t>(((x % 5) + 5) % 5); };
  e_ = {r(a), r(b), r(c), r(d)};
}

FpElem Mat2F5::det() const { return FpElem(int(e_[0]) * e_[3] - int(e_[1]) * e_[2], 5); }

Mat2F5 Mat2F5::operator*(const Mat2F5& o) const {
  return {e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
          e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]};
}

Mat2F5 Mat2F5::inverse() const {
  FpElem d = det();
  if (d.residue() == 0) throw ArithmeticError("singular matrix over F5");
  int di = static_cast<int>(d.inverse().residue());
  return {e_[3] * di, -e_[1] * di, -e_[2] * di, e_[0] * di};
}

std::string Mat2F5::str() const {
  std::ostringstream os;
  os << "[[" << int(e_[0]) << ',' << int(e_[1]) << "],[" << int(e_[2]) << ',' << int(e_[3])
     << "]]";
  return os.str();
}

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> images) {
  if (images.empty() || images.size() > 12) throw DomainError("Perm supports 1..12 points");
  n_ = static_cast<std::uint8_t>(images.size());
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    int x = images[i];
    if (x < 0 || x >= n_ || seen[x]) throw DomainError("Perm images are not a bijection");
    seen[x] = true;
    img_[i] = static_cast<std::uint8_t>(x);
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(v);
}

Perm Perm::operator*(const Perm& o) const {
  if (o.n_ != n_) throw DomainError("Perm size mismatch");
  Perm r = *this;
  for (int i = 0; i < n_; ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (int i = 0; i < n_; ++i) r.img_.at(img_[i]) = static_cast<std::uint8_t>(i);
  return r;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Perm::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << int(img_[i]);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- GroupElem

const Mat2F5& GroupElem::matrix() const {
  if (!is_matrix()) throw DomainError("group element is not a matrix");
  return std::get<Mat2F5>(v_);
}

const Perm& GroupElem::perm() const {
  if (is_matrix()) throw DomainError("group element is not a permutation");
  return std::get<Perm>(v_);
}

GroupElem GroupElem::operator*(const GroupElem& o) const {
  if (is_matrix() != o.is_matrix()) throw DomainError("mixed group element kinds");
  if (is_matrix()) return matrix() * o.matrix();
  return perm() * o.perm();
}

GroupElem GroupElem::inverse() const {
  if (is_matrix()) return matrix().inverse();
  return perm().inverse();
}

bool GroupElem::is_identity() const {
  if (is_matrix()) return matrix() == Mat2F5::identity();
  return perm() == Perm::identity(perm().size());
}

std::uint64_t GroupElem::key() const {
  if (is_matrix()) {
    const auto& m = matrix();
    return (std::uint64_t(1) << 62) |
           std::uint64_t(m.at(0) * 125 + m.at(1) * 25 + m.at(2) * 5 + m.at(3));
  }
  const auto& p = perm();
  std::uint64_t k = 0;
  for (int i = 0; i < p.size(); ++i) k = k * 13 + p(i);
  return k * 13 + p.size();
}

std::string GroupElem::str() const { return is_matrix() ? matrix().str() : perm().str(); }

// ---------------------------------------------------------------- Group

std::shared_ptr<const Group> Group::generate(std::string name,
                                             const std::vector<GroupElem>& generators) {
  if (generators.empty()) throw DomainError("generate: need at least one generator");
  std::vector<GroupElem> elems;
  std::unordered_map<std::uint64_t, bool> seen;
  GroupElem id = generators.front() * generators.front().inverse();
  elems.push_back(id);
  seen[id.key()] = true;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      GroupElem h = elems[i] * g;
      if (seen.emplace(h.key(), true).second) {
        elems.push_back(h);
        if (elems.size() > 65535) throw DomainError("generate: group too large to enumerate");
      }
    }
  }
  auto grp = std::shared_ptr<Group>(new Group());
  grp->name_ = std::move(name);
  grp->build(std::move(elems));
  return grp;
}

std::shared_ptr<const Group> Group::from_elements(std::string name,
                                                  std::vector<GroupElem> elements) {
  if (elements.empty()) throw DomainError("from_elements: empty element list");
  std::unordered_map<std::uint64_t, bool> keys;
  for (const auto& e : elements) keys[e.key()] = true;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!keys.count((a * b).key()))
        throw DomainError("from_elements: element list for " + name + " is not closed");
  auto grp = std::shared_ptr<Group>(new Group());
  grp->name_ = std::move(name);
  grp->build(std::move(elements));
  return grp;
}

void Group::build(std::vector<GroupElem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elems_ = std::move(elements);
  const size_t n = elems_.size();
  for (size_t i = 0; i < n; ++i) index_[elems_[i].key()] = i;

  table_.resize(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      table_[a * n + b] = static_cast<std::uint16_t>(index_.at((elems_[a] * elems_[b]).key()));

  identity_ = n;
  for (size_t i = 0; i < n; ++i)
    if (elems_[i].is_identity()) identity_ = i;
  if (identity_ == n) throw DomainError("group has no identity");

  inverse_.resize(n);
  for (size_t a = 0; a < n; ++a) inverse_[a] = index_.at(elems_[a].inverse().key());

  orders_.resize(n);
  for (size_t a = 0; a < n; ++a) {
    int k = 1;
    for (size_t x = a; x != identity_; x = mul(x, a)) ++k;
    orders_[a] = k;
  }

  // Conjugacy classes; ascending scan makes each representative the least member.
  std::vector<ConjugacyClass> raw;
  std::vector<size_t> raw_of(n, n);
  for (size_t e = 0; e < n; ++e) {
    if (raw_of[e] != n) continue;
    ConjugacyClass c{e, 0, orders_[e], {}};
    for (size_t g = 0; g < n; ++g) {
      size_t h = conjugate(e, g);
      if (raw_of[h] == n) {
        raw_of[h] = raw.size();
        c.members.push_back(h);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.size = c.members.size();
    raw.push_back(std::move(c));
  }
  std::vector<size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    const auto& x = raw[a];
    const auto& y = raw[b];
    bool xi = x.representative == identity_, yi = y.representative == identity_;
    if (xi != yi) return xi;
    return std::tie(x.order, x.size, x.representative) <
           std::tie(y.order, y.size, y.representative);
  });
  std::vector<size_t> new_index(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) new_index[perm[i]] = i;
  classes_.clear();
  for (size_t i : perm) classes_.push_back(raw[i]);
  class_of_.resize(n);
  for (size_t e = 0; e < n; ++e) class_of_[e] = new_index[raw_of[e]];

  power_.assign(classes_.size(), {});
  for (size_t c = 0; c < classes_.size(); ++c) {
    size_t rep = classes_[c].representative;
    size_t x = identity_;
    for (int k = 0; k < classes_[c].order; ++k) {
      power_[c].push_back(class_of_[x]);
      x = mul(x, rep);
    }
  }
}

std::optional<size_t> Group::find(const GroupElem& g) const {
  auto it = index_.find(g.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Group::index_of(const GroupElem& g) const {
  auto i = find(g);
  if (!i) throw DomainError("element " + g.str() + " is not in " + name_);
  return *i;
}

size_t Group::pow(size_t a, long k) const {
  long ord = orders_[a];
  long e = ((k % ord) + ord) % ord;
  size_t x = identity_;
  for (long i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

int Group::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

size_t Group::power_class(size_t c, long k) const {
  const auto& row = power_[c];
  long ord = static_cast<long>(row.size());
  return row[((k % ord) + ord) % ord];
}

std::vector<size_t> Group::center() const {
  std::vector<size_t> out;
  for (const auto& c : classes_)
    if (c.size == 1) out.push_back(c.representative);
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::contains_all(const std::vector<GroupElem>& gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](const GroupElem& g) { return find(g).has_value(); });
}

// ---------------------------------------------------------------- maps

namespace {

ClassMap finish_map(const GroupPtr& source, const GroupPtr& target,
                    std::vector<size_t> element_map, const char* what) {
  ClassMap m{source, target, std::move(element_map), {}};
  m.class_map.assign(source->num_classes(), target->num_classes());
  for (size_t e = 0; e < source->order(); ++e) {
    size_t sc = source->class_of(e);
    size_t tc = target->class_of(m.element_map[e]);
    if (m.class_map[sc] == target->num_classes()) {
      m.class_map[sc] = tc;
    } else if (m.class_map[sc] != tc) {
      throw DomainError(std::string(what) + ": inconsistent class map from " + source->name() +
                        " to " + target->name());
    }
  }
  return m;
}

}  // namespace

ClassMap make_inclusion(const GroupPtr& sub, const GroupPtr& parent) {
  std::vector<size_t> em(sub->order());
  for (size_t e = 0; e < sub->order(); ++e) {
    auto i = parent->find(sub->element(e));
    if (!i) throw DomainError(sub->name() + " is not contained in " + parent->name());
    em[e] = *i;
  }
  return finish_map(sub, parent, std::move(em), "inclusion");
}

ClassMap make_homomorphism(const GroupPtr& source, const GroupPtr& target,
                           const std::function<GroupElem(const GroupElem&)>& f) {
  std::vector<size_t> em(source->order());
  for (size_t e = 0; e < source->order(); ++e) em[e] = target->index_of(f(source->element(e)));
  for (size_t a = 0; a < source->order(); a += 7)
    for (size_t b = 0; b < source->order(); b += 5)
      if (em[source->mul(a, b)] != target->mul(em[a], em[b]))
        throw DomainError("map " + source->name() + " -> " + target->name() +
                          " is not a homomorphism");
  return finish_map(source, target, std::move(em), "homomorphism");
}

// ---------------------------------------------------------------- labels

const std::vector<ClassLabel>& s5_labels() {
  static const std::vector<ClassLabel> labels = {
      {"1", 1, +1},  {"2A", 2, -1}, {"2B", 2, +1}, {"3A", 3, +1},
      {"4A", 4, -1}, {"5A", 5, +1}, {"6A", 6, -1},
  };
  return labels;
}

const std::vector<int>& s5_class_sizes() {
  static const std::vector<int> sizes = {1, 10, 15, 20, 30, 24, 20};
  return sizes;
}

const ClassLabel& label_from_order_parity(int order, int parity) {
  for (const auto& l : s5_labels())
    if (l.order == order && l.parity == parity) return l;
  throw DomainError("no S5 class with order " + std::to_string(order) + " and parity " +
                    std::to_string(parity));
}

const ClassLabel& label_by_name(const std::string& name) {
  for (const auto& l : s5_labels())
    if (l.name == name) return l;
  throw DomainError("unknown S5 class label '" + name + "'");
}

size_t label_index(const ClassLabel& label) {
  const auto& all = s5_labels();
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == label) return i;
  throw DomainError("label not in the S5 dictionary");
}

// ---------------------------------------------------------------- GL2(F5)

std::shared_ptr<const Group> build_gl2f5() {
  // A primitive-root diagonal matrix and a unipotent-times-Weyl element generate GL2(Fp).
  return Group::generate("GL2(F5)", {Mat2F5(2, 0, 0, 1), Mat2F5(-1, 1, -1, 0)});
}

namespace {

void require_gl2(const GroupPtr& g) {
  if (!g || g->order() != 480 || !g->element(0).is_matrix())
    throw DomainError("expected the GL2(F5) group, got " + (g ? g->name() : std::string("null")));
}

}  // namespace

std::shared_ptr<const Group> subgroup_where(const GroupPtr& g, std::string name,
                                           const std::function<bool(const GroupElem&)>& keep) {
  std::vector<GroupElem> elems;
  for (const auto& e : g->elements())
    if (keep(e)) elems.push_back(e);
  return Group::from_elements(std::move(name), std::move(elems));
}

std::shared_ptr<const Group> subgroup_na5(const GroupPtr& gl2) {
  require_gl2(gl2);
  return subgroup_where(gl2, "N.A5",
                        [](const GroupElem& e) { return e.matrix().det().is_square(); });
}

std::shared_ptr<const Group> subgroup_scalars(const GroupPtr& gl2) {
  require_gl2(gl2);
  return subgroup_where(gl2, "Delta", [](const GroupElem& e) { return e.matrix().is_scalar(); });
}

const ClassLabel& pgl_class_label(const Mat2F5& m) {
  if (m.det().residue() == 0) throw DomainError("pgl_class_label: singular matrix");
  int order = 1;
  Mat2F5 x = m;
  while (!x.is_scalar()) {
    x = x * m;
    ++order;
  }
  return label_from_order_parity(order, m.det().is_square() ? +1 : -1);
}

const ClassLabel& cycle_type_label(std::vector<int> partition) {
  int sum = 0, order = 1, parity = 1;
  for (int part : partition) {
    if (part <= 0) throw DomainError("cycle_type_label: parts must be positive");
    sum += part;
    order = std::lcm(order, part);
    if (part % 2 == 0) parity = -parity;
  }
  if (sum != 5) throw DomainError("cycle_type_label: partition must sum to 5");
  return label_from_order_parity(order, parity);
}

GroupElem outer_transversal(const GroupPtr& gl2) {
  require_gl2(gl2);
  for (const auto& e : gl2->elements())
    if (!e.matrix().det().is_square()) return e;
  throw InconsistencyError("GL2(F5) has no element of non-square determinant");
}

Perm projective_line_action(const Mat2F5& m) {
  std::vector<int> img(6);
  auto point_index = [](int x, int y) {
    x = ((x % 5) + 5) % 5;
    y = ((y % 5) + 5) % 5;
    if (y == 0) return 5;
    int yi = static_cast<int>(FpElem(y, 5).inverse().residue());
    return (x * yi) % 5;
  };
  for (int p = 0; p < 6; ++p) {
    int x = p < 5 ? p : 1;
    int y = p < 5 ? 1 : 0;
    img[p] = point_index(m.at(0) * x + m.at(1) * y, m.at(2) * x + m.at(3) * y);
  }
  return Perm(img);
}

ProjectiveImage build_pgl2f5(const GroupPtr& gl2) {
  require_gl2(gl2);
  std::vector<GroupElem> gens;
  for (const auto& e : gl2->elements()) gens.push_back(projective_line_action(e.matrix()));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto pgl = Group::from_elements("PGL2(F5)", std::move(gens));
  ProjectiveImage out{pgl, make_homomorphism(gl2, pgl, [](const GroupElem& e) -> GroupElem {
                        return projective_line_action(e.matrix());
                      }),
                      {}};
  out.labels.resize(pgl->num_classes(), s5_labels().front());
  std::vector<bool> done(pgl->num_classes(), false);
  for (size_t c = 0; c < gl2->num_classes(); ++c) {
    size_t pc = out.projection.class_map[c];
    const auto& lab = pgl_class_label(gl2->element(gl2->cls(c).representative).matrix());
    if (done[pc] && !(out.labels[pc] == lab))
      throw InconsistencyError("PGL2(F5) class receives two different labels");
    out.labels[pc] = lab;
    done[pc] = true;
  }
  return out;
}

std::shared_ptr<const Group> trivial_group() {
  return Group::generate("1", {Perm::identity(1)});
}

}  // namespace s5artin
