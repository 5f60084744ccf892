#include "s5artin/chars.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "s5artin/error.hpp"

namespace s5artin {

// ---------------------------------------------------------------- Character

Character::Character(GroupPtr group, std::vector<Cyc> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw DomainError("character without a group");
  if (values_.size() != group_->num_classes())
    throw DomainError("character value count does not match the classes of " + group_->name());
}

Character Character::trivial(const GroupPtr& group) {
  return Character(group, std::vector<Cyc>(group->num_classes(), Cyc(1L)));
}

int Character::degree() const {
  const Cyc& v = values_[0];
  if (!v.is_rational() || !v.to_rat().is_integer() || v.to_rat().sign() <= 0)
    throw DomainError("character degree " + v.str() + " is not a positive integer");
  return static_cast<int>(v.to_rat().numerator().get_si());
}

void Character::require_same_group(const Character& o) const {
  if (group_ != o.group_)
    throw DomainError("characters live on different groups (" + group_->name() + ", " +
                      o.group_->name() + ")");
}

Character Character::operator+(const Character& o) const {
  require_same_group(o);
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c] + o.values_[c];
  return Character(group_, std::move(v));
}

Character Character::operator-(const Character& o) const {
  require_same_group(o);
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c] - o.values_[c];
  return Character(group_, std::move(v));
}

Character Character::operator*(const Character& o) const {
  require_same_group(o);
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c] * o.values_[c];
  return Character(group_, std::move(v));
}

Character Character::scaled(const Rat& r) const {
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c].scaled(r);
  return Character(group_, std::move(v));
}

Character Character::conj() const {
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c].conj();
  return Character(group_, std::move(v));
}

Character Character::power(long n) const {
  if (n < 0) {
    if (!is_linear()) throw DomainError("negative tensor power of a non-linear character");
    return conj().power(-n);
  }
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[c].pow(static_cast<unsigned long>(n));
  return Character(group_, std::move(v));
}

Character Character::permuted(const std::vector<size_t>& perm) const {
  if (perm.size() != values_.size()) throw DomainError("class permutation has the wrong size");
  std::vector<Cyc> v(values_.size());
  for (size_t c = 0; c < v.size(); ++c) v[c] = values_[perm[c]];
  return Character(group_, std::move(v));
}

bool operator==(const Character& a, const Character& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::optional<size_t> first_difference(const Character& a, const Character& b) {
  a.require_same_group(b);
  for (size_t c = 0; c < a.values_.size(); ++c)
    if (!(a.values_[c] == b.values_[c])) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------- EigenMultiset

EigenMultiset::EigenMultiset(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (auto& e : exps_) e = ((e % kConductor) + kConductor) % kConductor;
  std::sort(exps_.begin(), exps_.end());
}

std::vector<Cyc> EigenMultiset::values() const {
  std::vector<Cyc> out;
  for (int e : exps_) out.push_back(Cyc::root(e));
  return out;
}

Cyc EigenMultiset::sum() const {
  Cyc s;
  for (int e : exps_) s += Cyc::root(e);
  return s;
}

int EigenMultiset::product_exponent() const {
  int s = 0;
  for (int e : exps_) s = (s + e) % kConductor;
  return s;
}

EigenMultiset EigenMultiset::scaled(int k) const {
  std::vector<int> v = exps_;
  for (auto& e : v) e += k;
  return EigenMultiset(std::move(v));
}

std::map<int, int> EigenMultiset::multiplicities() const {
  std::map<int, int> m;
  for (int e : exps_) ++m[e];
  return m;
}

std::string EigenMultiset::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < exps_.size(); ++i) os << (i ? ", " : "") << "z^" << exps_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- Dixon

namespace {

constexpr std::uint64_t kDixonPrime = 241;

using ModVec = std::vector<std::uint64_t>;
using ModMat = std::vector<ModVec>;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Basis of the right nullspace of an m x n matrix over F_p.
std::vector<ModVec> nullspace(ModMat a, size_t n, std::uint64_t p) {
  const size_t m = a.size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    std::uint64_t inv = invmod(a[row][col], p);
    for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv % p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      std::uint64_t f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] = (a[i][j] + p - f * a[row][j] % p) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits the A-invariant subspace spanned by `basis` into eigenspaces of A.
// Returns an empty list if the eigenspaces do not fill the subspace.
std::vector<std::vector<ModVec>> split(const ModMat& a, const std::vector<ModVec>& basis,
                                       std::uint64_t p) {
  const size_t r = a.size();
  const size_t d = basis.size();
  // images A v_k
  std::vector<ModVec> images(d, ModVec(r, 0));
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < r; ++i) {
      std::uint64_t s = 0;
      for (size_t j = 0; j < r; ++j) s = (s + a[i][j] * basis[k][j]) % p;
      images[k][i] = s;
    }
  std::vector<std::vector<ModVec>> pieces;
  size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < p && found < d; ++lambda) {
    // columns (A - lambda) v_k as an r x d system in the coordinates
    ModMat m(r, ModVec(d, 0));
    for (size_t k = 0; k < d; ++k)
      for (size_t i = 0; i < r; ++i)
        m[i][k] = (images[k][i] + p - lambda * basis[k][i] % p) % p;
    auto coords = nullspace(std::move(m), d, p);
    if (coords.empty()) continue;
    std::vector<ModVec> space;
    for (const auto& cvec : coords) {
      ModVec v(r, 0);
      for (size_t k = 0; k < d; ++k)
        for (size_t i = 0; i < r; ++i) v[i] = (v[i] + cvec[k] * basis[k][i]) % p;
      space.push_back(std::move(v));
    }
    found += space.size();
    pieces.push_back(std::move(space));
  }
  if (found != d) return {};
  return pieces;
}

std::uint64_t primitive_root_of_unity_120(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::uint64_t q : {2u, 3u, 5u})
      if (powmod(g, (p - 1) / q, p) == 1) generator = false;
    if (generator) return powmod(g, (p - 1) / kConductor, p);
  }
  throw InconsistencyError("no primitive root modulo the Dixon prime");
}

bool values_less(const Character& a, const Character& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t c = 0; c < a.size(); ++c) {
    if (lex_less(a[c], b[c])) return true;
    if (lex_less(b[c], a[c])) return false;
  }
  return false;
}

}  // namespace

std::vector<Character> character_table(const GroupPtr& g) {
  const std::uint64_t p = kDixonPrime;
  if (kConductor % g->exponent() != 0)
    throw DomainError("group exponent of " + g->name() + " does not divide 120");
  const size_t r = g->num_classes();
  const std::uint64_t order = g->order();

  // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<ModMat> struct_mats(r, ModMat(r, ModVec(r, 0)));
  for (size_t k = 0; k < r; ++k) {
    size_t z = g->cls(k).representative;
    for (size_t i = 0; i < r; ++i)
      for (size_t x : g->cls(i).members) {
        size_t j = g->class_of(g->mul(g->inv(x), z));
        struct_mats[i][j][k] += 1;
      }
  }
  for (auto& m : struct_mats)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  std::vector<std::vector<ModVec>> spaces;
  {
    std::vector<ModVec> full;
    for (size_t i = 0; i < r; ++i) {
      ModVec e(r, 0);
      e[i] = 1;
      full.push_back(e);
    }
    spaces.push_back(std::move(full));
  }
  for (size_t i = 1; i < r; ++i) {
    bool all_one = std::all_of(spaces.begin(), spaces.end(),
                               [](const auto& s) { return s.size() == 1; });
    if (all_one) break;
    std::vector<std::vector<ModVec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto pieces = split(struct_mats[i], s, p);
      if (pieces.empty())
        throw InconsistencyError("class-algebra matrix is not diagonalisable mod 241 for " +
                                 g->name());
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw InconsistencyError("failed to split class-algebra eigenspaces for " + g->name());

  const std::uint64_t z120 = primitive_root_of_unity_120(p);
  std::vector<Character> table;
  for (const auto& s : spaces) {
    ModVec w = s.front();
    if (w[0] == 0) throw InconsistencyError("central character vanishes at the identity");
    std::uint64_t norm = invmod(w[0], p);
    for (auto& x : w) x = x * norm % p;

    // degree^2 = |G| / sum_i w_i w_i* / |C_i|
    std::uint64_t ssum = 0;
    for (size_t c = 0; c < r; ++c) {
      size_t ci = g->inverse_class(c);
      ssum = (ssum + w[c] * w[ci] % p * invmod(g->cls(c).size % p, p)) % p;
    }
    std::uint64_t d2 = order % p * invmod(ssum, p) % p;
    int degree = 0;
    for (int d = 1; std::uint64_t(d) * d <= order; ++d)
      if (std::uint64_t(d) * d % p == d2) {
        if (degree != 0) throw InconsistencyError("ambiguous character degree mod 241");
        degree = d;
      }
    if (degree == 0) throw InconsistencyError("no character degree matches mod 241");

    ModVec chi_mod(r);
    for (size_t c = 0; c < r; ++c)
      chi_mod[c] = w[c] * degree % p * invmod(g->cls(c).size % p, p) % p;

    std::vector<Cyc> values(r);
    for (size_t c = 0; c < r; ++c) {
      const int m = g->cls(c).order;
      const int step = kConductor / m;
      const std::uint64_t inv_m = invmod(m, p);
      int total = 0;
      Cyc v;
      for (int j = 0; j < m; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < m; ++k) {
          std::uint64_t root = powmod(z120, (kConductor - (step * j * k) % kConductor) % kConductor, p);
          s = (s + chi_mod[g->power_class(c, k)] * root) % p;
        }
        std::uint64_t mult = s * inv_m % p;
        if (mult > static_cast<std::uint64_t>(degree))
          throw InconsistencyError("eigenvalue multiplicity out of range while lifting");
        total += static_cast<int>(mult);
        if (mult) v += Cyc::root(step * j).scaled(Rat(static_cast<long>(mult)));
      }
      if (total != degree) throw InconsistencyError("lifted multiplicities do not sum to degree");
      values[c] = std::move(v);
    }
    table.emplace_back(g, std::move(values));
  }
  std::sort(table.begin(), table.end(), values_less);

  long sum_sq = 0;
  for (const auto& chi : table) sum_sq += long(chi.degree()) * chi.degree();
  if (sum_sq != static_cast<long>(order))
    throw InconsistencyError("sum of squared degrees differs from |G| for " + g->name());
  return table;
}

// ---------------------------------------------------------------- operations

Rat inner(const Character& a, const Character& b) {
  if (a.group() != b.group()) throw DomainError("inner: characters on different groups");
  const auto& g = *a.group();
  Cyc s;
  for (size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += (a[c] * b[c].conj()).scaled(Rat(static_cast<long>(g.cls(c).size)));
  }
  s = s.scaled(Rat(1) / Rat(static_cast<long>(g.order())));
  return s.to_rat();
}

namespace {

Character from_power_formula(const Character& a, int max_power,
                             const std::function<Cyc(const std::vector<Cyc>&)>& f) {
  const auto& g = *a.group();
  std::vector<Cyc> v(a.size());
  for (size_t c = 0; c < a.size(); ++c) {
    std::vector<Cyc> pw(max_power + 1);
    for (int k = 1; k <= max_power; ++k) pw[k] = a[g.power_class(c, k)];
    v[c] = f(pw);
  }
  return Character(a.group(), std::move(v));
}

}  // namespace

Character sym_power(const Character& a, int k) {
  switch (k) {
    case 0:
      return Character::trivial(a.group());
    case 1:
      return a;
    case 2:
      return from_power_formula(a, 2, [](const std::vector<Cyc>& p) {
        return (p[1] * p[1] + p[2]).scaled(Rat(1, 2));
      });
    case 3:
      return from_power_formula(a, 3, [](const std::vector<Cyc>& p) {
        return (p[1] * p[1] * p[1] + (p[1] * p[2]).scaled(3) + p[3].scaled(2)).scaled(Rat(1, 6));
      });
    case 4:
      return from_power_formula(a, 4, [](const std::vector<Cyc>& p) {
        Cyc sq = p[1] * p[1];
        return (sq * sq + (sq * p[2]).scaled(6) + (p[2] * p[2]).scaled(3) +
                (p[1] * p[3]).scaled(8) + p[4].scaled(6))
            .scaled(Rat(1, 24));
      });
    default:
      throw DomainError("sym_power supports 0 <= k <= 4");
  }
}

Character ext_power(const Character& a, int k) {
  switch (k) {
    case 0:
      return Character::trivial(a.group());
    case 1:
      return a;
    case 2:
      return from_power_formula(a, 2, [](const std::vector<Cyc>& p) {
        return (p[1] * p[1] - p[2]).scaled(Rat(1, 2));
      });
    default:
      throw DomainError("ext_power supports 0 <= k <= 2");
  }
}

Character pullback(const Character& a, const ClassMap& map) {
  if (map.target != a.group())
    throw DomainError("pullback: map targets " + map.target->name() + " but character lives on " +
                      a.group()->name());
  if (map.class_map.size() != map.source->num_classes())
    throw DomainError("pullback: class map has the wrong size");
  std::vector<Cyc> v(map.source->num_classes());
  for (size_t c = 0; c < v.size(); ++c) {
    size_t t = map.class_map[c];
    if (t >= a.size()) throw DomainError("pullback: inconsistent class embedding");
    v[c] = a[t];
  }
  return Character(map.source, std::move(v));
}

std::vector<Character> extensions_of(const Character& a, const ClassMap& inclusion,
                                     const std::vector<Character>& parent_table) {
  if (inclusion.source != a.group())
    throw DomainError("extensions_of: inclusion does not start at the character's group");
  if (inclusion.target->order() != 2 * inclusion.source->order())
    throw DomainError("extensions_of: subgroup is not of index 2");
  if (inner(a, a) != Rat(1)) throw DomainError("extensions_of: character is not irreducible");
  std::vector<Character> out;
  for (const auto& chi : parent_table) {
    if (chi.group() != inclusion.target)
      throw DomainError("extensions_of: table belongs to a different group");
    if (pullback(chi, inclusion) == a) out.push_back(chi);
  }
  return out;
}

int fs_indicator(const Character& a) { return fs_indicator(a, Character::trivial(a.group())); }

int fs_indicator(const Character& a, const Character& similitude) {
  if (inner(a, a) != Rat(1)) throw DomainError("fs_indicator: character is not irreducible");
  if (similitude.group() != a.group() || !similitude.is_linear())
    throw DomainError("fs_indicator: similitude must be a linear character of the same group");
  const auto& g = *a.group();
  Cyc s;
  for (size_t c = 0; c < a.size(); ++c)
    s += (a[g.power_class(c, 2)] * similitude[c].conj())
             .scaled(Rat(static_cast<long>(g.cls(c).size)));
  Rat v = s.scaled(Rat(1) / Rat(static_cast<long>(g.order()))).to_rat();
  if (v != Rat(1) && v != Rat(0) && v != Rat(-1))
    throw InconsistencyError("Frobenius-Schur indicator outside {-1, 0, 1}");
  return static_cast<int>(v.numerator().get_si());
}

EigenMultiset eigenvalues(const Character& a, size_t c) {
  const auto& g = *a.group();
  const int m = g.cls(c).order;
  const int step = kConductor / m;
  if (kConductor % m != 0) throw DomainError("element order does not divide 120");
  std::vector<int> exps;
  for (int j = 0; j < m; ++j) {
    Cyc s;
    for (int k = 0; k < m; ++k) s += a[g.power_class(c, k)].mul_root(-long(step) * j * k);
    s = s.scaled(Rat(1, m));
    if (!s.is_rational() || !s.to_rat().is_integer() || s.to_rat().sign() < 0)
      throw InconsistencyError("eigenvalue multiplicity " + s.str() + " on class " +
                               std::to_string(c) + " is not a non-negative integer");
    long mult = s.to_rat().numerator().get_si();
    for (long t = 0; t < mult; ++t) exps.push_back(step * j);
  }
  EigenMultiset out(std::move(exps));
  if (!(Cyc(static_cast<long>(out.size())) == a[0]))
    throw InconsistencyError("eigenvalue count differs from the character degree");
  return out;
}

Character induced_perm_char(const GroupPtr& g, const GroupPtr& h) {
  std::vector<bool> in_h(g->order(), false);
  for (const auto& e : h->elements()) in_h[g->index_of(e)] = true;
  if (g->order() % h->order() != 0) throw DomainError("subgroup order does not divide |G|");
  std::vector<Cyc> v(g->num_classes());
  for (size_t c = 0; c < g->num_classes(); ++c) {
    size_t x = g->cls(c).representative;
    long count = 0;
    for (size_t y = 0; y < g->order(); ++y)
      if (in_h[g->mul(g->mul(g->inv(y), x), y)]) ++count;
    v[c] = Cyc(Rat(count) / Rat(static_cast<long>(h->order())));
  }
  return Character(g, std::move(v));
}

std::vector<size_t> conjugation_class_action(const GroupPtr& h, const GroupElem& t) {
  GroupElem ti = t.inverse();
  std::vector<size_t> perm(h->num_classes());
  for (size_t c = 0; c < h->num_classes(); ++c) {
    const GroupElem& x = h->element(h->cls(c).representative);
    perm[c] = h->class_of(h->index_of(t * x * ti));
  }
  return perm;
}

}  // namespace s5artin
