#include "s5artin/rat.hpp"

#include "s5artin/error.hpp"

namespace s5artin {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

}  // namespace s5artin
