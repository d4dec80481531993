#include "chiralkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit {

Polynomial Polynomial::variable(int axis) {
  Monomial m;
  if (axis == 0)
    m.ex = 1;
  else if (axis == 1)
    m.ey = 1;
  else if (axis == 2)
    m.ez = 1;
  else
    throw std::invalid_argument("variable axis must be 0, 1 or 2");
  return monomial(m, rat(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

int Polynomial::min_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = (d < 0) ? m.degree() : std::min(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.ex < 0 || m.ey < 0 || m.ez < 0) throw std::invalid_argument("negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}, ca * cb);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
  return r;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    long e = 0;
    if (axis == 0) {
      e = m.ex;
      d.ex -= 1;
    } else if (axis == 1) {
      e = m.ey;
      d.ey -= 1;
    } else if (axis == 2) {
      e = m.ez;
      d.ez -= 1;
    } else {
      throw std::invalid_argument("derivative axis must be 0, 1 or 2");
    }
    if (e > 0) r.add_term(d, rat(e) * c);
  }
  return r;
}

Polynomial Polynomial::truncate(int k) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= k) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::substitute_zero(int axis) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = axis == 0 ? m.ex : (axis == 1 ? m.ey : m.ez);
    if (e == 0) r.terms_.emplace(m, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace(m, c);
  return r;
}

Rational Polynomial::evaluate_exact(const Rational& x, const Rational& y, const Rational& z) const {
  int maxd = total_degree();
  if (maxd < 0) return rat(0);
  std::vector<Rational> px(maxd + 1, rat(1)), py(maxd + 1, rat(1)), pz(maxd + 1, rat(1));
  for (int i = 1; i <= maxd; ++i) {
    px[i] = px[i - 1] * x;
    py[i] = py[i - 1] * y;
    pz[i] = pz[i - 1] * z;
  }
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * px[m.ex] * py[m.ey] * pz[m.ez];
  return acc;
}

double Polynomial::evaluate(const Eigen::Vector3d& p) const {
  return rat_to_double(
      evaluate_exact(rat_from_double(p.x()), rat_from_double(p.y()), rat_from_double(p.z())));
}

double Polynomial::max_coefficient_magnitude() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(rat_to_double(c)));
  return m;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    std::string coeff = a.get_den() == 1 ? a.get_num().get_str() : rat_to_string(a);
    bool has_vars = m.degree() > 0;
    if (!has_vars || coeff != "1") out += coeff;
    auto append_var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!out.empty() && (std::isdigit(out.back()) || std::isalpha(out.back()))) out += "*";
      out += name;
      if (e > 1) out += "^" + std::to_string(e);
    };
    append_var("x", m.ex);
    append_var("y", m.ey);
    append_var("z", m.ez);
  }
  return out;
}

PolyEval::PolyEval(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    terms_.push_back({m.ex, m.ey, m.ez, rat_to_double(c)});
    max_degree_ = std::max(max_degree_, m.degree());
  }
  for (int axis = 0; axis < 3; ++axis) {
    Polynomial dp = p.derivative(axis);
    for (const auto& [m, c] : dp.terms())
      grad_[axis].push_back({m.ex, m.ey, m.ez, rat_to_double(c)});
  }
}

namespace {

inline void fill_powers(double v, int n, double* out) {
  out[0] = 1.0;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * v;
}

}  // namespace

double PolyEval::operator()(const Eigen::Vector3d& p) const {
  constexpr int kMax = 64;
  double px[kMax], py[kMax], pz[kMax];
  fill_powers(p.x(), max_degree_, px);
  fill_powers(p.y(), max_degree_, py);
  fill_powers(p.z(), max_degree_, pz);
  double acc = 0.0;
  for (const Term& t : terms_) acc += t.c * px[t.ex] * py[t.ey] * pz[t.ez];
  return acc;
}

Eigen::Vector3d PolyEval::gradient(const Eigen::Vector3d& p) const {
  constexpr int kMax = 64;
  double px[kMax], py[kMax], pz[kMax];
  fill_powers(p.x(), max_degree_, px);
  fill_powers(p.y(), max_degree_, py);
  fill_powers(p.z(), max_degree_, pz);
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  for (int axis = 0; axis < 3; ++axis)
    for (const Term& t : grad_[axis]) g[axis] += t.c * px[t.ex] * py[t.ey] * pz[t.ez];
  return g;
}

// ---------------------------------------------------------------------------
// Parser: expr = term (('+'|'-') term)*; term = factor (('*'|'/') factor)*;
// factor = base ('^' uint)?; base = number | 'x'|'y'|'z' | '(' expr ')'.
// Division is only defined when the divisor is a constant.

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    while (consume('+') || (peek_is('-') && (consume('-'), neg = !neg, true))) skip_ws();
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        acc = acc * factor();
      } else if (consume('/')) {
        Polynomial d = factor();
        if (d.total_degree() != 0)
          throw ParseError("division requires a constant divisor", pos_);
        Rational c = d.coefficient({0, 0, 0});
        if (sgn(c) == 0) throw ParseError("division by zero", pos_);
        acc = (rat(1) / c) * acc;
      } else {
        // Implicit multiplication: a variable, digit or '(' right after a factor.
        skip_ws();
        if (pos_ < src_.size()) {
          char c = src_[pos_];
          if (c == 'x' || c == 'y' || c == 'z' || c == '(' ||
              std::isdigit(static_cast<unsigned char>(c))) {
            acc = acc * factor();
            continue;
          }
        }
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected integer exponent", pos_);
      int e = std::stoi(std::string(src_.substr(start, pos_ - start)));
      Polynomial acc(rat(1));
      for (int i = 0; i < e; ++i) acc = acc * b;
      return acc;
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Polynomial::variable(c == 'x' ? 0 : (c == 'y' ? 1 : 2));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
        ++pos_;
      try {
        return Polynomial(rat_from_string(src_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view src) { return Parser(src).parse(); }

Polynomial laplacian(const Polynomial& p) {
  Polynomial r;
  for (int axis = 0; axis < 3; ++axis) r += p.derivative(axis).derivative(axis);
  return r;
}

namespace {

Polynomial r_squared() {
  Polynomial r2;
  r2.add_term({2, 0, 0}, rat(1));
  r2.add_term({0, 2, 0}, rat(1));
  r2.add_term({0, 0, 2}, rat(1));
  return r2;
}

// laplacian(r^{2m} p) = [2m(2m+1) + 4ms] r^{2m-2} p + r^{2m} laplacian(p)
// for homogeneous p of degree s; the recursion below inverts this exactly.
Polynomial poisson_solve_homogeneous(const Polynomial& q, int d) {
  Polynomial f;
  Polynomial r2 = r_squared();
  Polynomial r_pow = r2;  // r^{2(j+1)}
  Polynomial p = q;       // laplacian^j q
  Rational a = rat(1);
  for (int j = 0; !p.is_zero(); ++j) {
    // K_j = 2(j+1)(2d - 2j + 3) is positive for all reachable j.
    Rational K = rat(2L * (j + 1) * (2L * d - 2L * j + 3));
    a = (j == 0) ? Rational(rat(1) / K) : Rational(-a / K);
    f += a * (r_pow * p);
    p = laplacian(p);
    r_pow = r_pow * r2;
  }
  return f;
}

}  // namespace

Polynomial poisson_solve(const Polynomial& q) {
  Polynomial f;
  for (int d = q.min_degree(); d <= q.total_degree(); ++d) {
    Polynomial qd = q.homogeneous_part(d);
    if (!qd.is_zero()) f += poisson_solve_homogeneous(qd, d);
  }
  return f;
}

}  // namespace chiralkit
