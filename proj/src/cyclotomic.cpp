#include "pichar/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "pichar/errors.hpp"

namespace pichar {

namespace {

constexpr long long kConductorCap = 20000;

using ZPoly = std::vector<BigInt>;  // constant term first

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division of a by b (b monic up to sign of leading coefficient +-1).
ZPoly poly_div_exact(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InternalError("cyclotomic polynomial division underflow");
  ZPoly q(a.size() - db, BigInt(0));
  const BigInt& lead = b.back();
  for (size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    if (a[i] % lead != 0) throw InternalError("cyclotomic polynomial division not exact");
    const BigInt c = a[i] / lead;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const BigInt& c : a)
    if (c != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

std::mutex g_poly_mutex;
std::map<long long, ZPoly> g_cyclotomic_polys;

const ZPoly& cyclotomic_poly_locked(long long n) {
  auto it = g_cyclotomic_polys.find(n);
  if (it != g_cyclotomic_polys.end()) return it->second;
  ZPoly result;
  if (n == 1) {
    result = {BigInt(-1), BigInt(1)};  // x - 1
  } else {
    ZPoly num(n + 1, BigInt(0));  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    ZPoly den{BigInt(1)};
    for (long long d = 1; d < n; ++d)
      if (n % d == 0) den = poly_mul(den, cyclotomic_poly_locked(d));
    result = poly_div_exact(std::move(num), den);
  }
  return g_cyclotomic_polys.emplace(n, std::move(result)).first->second;
}

// Per-conductor reduction data: x^e mod Phi_n for e in [phi, n), grown lazily.
struct ConductorContext {
  long long n = 1;
  long long phi = 1;
  ZPoly minpoly;
  std::vector<std::vector<BigInt>> rows;
  std::mutex rows_mutex;

  std::vector<BigInt> row_copy(long long e) {
    std::lock_guard<std::mutex> lock(rows_mutex);
    while (static_cast<long long>(rows.size()) + phi <= e) {
      std::vector<BigInt> next(phi, BigInt(0));
      if (rows.empty()) {
        for (long long i = 0; i < phi; ++i) next[i] = -minpoly[i];  // x^phi
      } else {
        const std::vector<BigInt>& prev = rows.back();
        const BigInt top = prev[phi - 1];
        for (long long i = phi - 1; i > 0; --i) next[i] = prev[i - 1];
        next[0] = 0;
        if (top != 0)
          for (long long i = 0; i < phi; ++i) next[i] -= top * minpoly[i];
      }
      rows.push_back(std::move(next));
    }
    return rows[e - phi];
  }
};

std::mutex g_context_mutex;
std::map<long long, std::shared_ptr<ConductorContext>> g_contexts;

std::shared_ptr<ConductorContext> context(long long n) {
  if (n < 1) throw InvalidInput("conductor must be positive");
  if (n > kConductorCap)
    throw ResourceLimit("conductor " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kConductorCap));
  std::lock_guard<std::mutex> lock(g_context_mutex);
  auto it = g_contexts.find(n);
  if (it != g_contexts.end()) return it->second;
  auto ctx = std::make_shared<ConductorContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  {
    std::lock_guard<std::mutex> poly_lock(g_poly_mutex);
    ctx->minpoly = cyclotomic_poly_locked(n);
  }
  g_contexts.emplace(n, ctx);
  return ctx;
}

// Reduces a coefficient vector over exponents 0..n-1 to the power basis.
std::vector<BigRational> reduce_mod_minpoly(ConductorContext& ctx, std::vector<BigRational> v) {
  for (long long e = ctx.n - 1; e >= ctx.phi; --e) {
    if (v[e] == 0) continue;
    const BigRational c = std::move(v[e]);
    v[e] = 0;
    const std::vector<BigInt> row = ctx.row_copy(e);
    for (long long i = 0; i < ctx.phi; ++i)
      if (row[i] != 0) v[i] += c * BigRational(row[i]);
  }
  v.resize(ctx.phi);
  return v;
}

}  // namespace

long long euler_phi(long long n) {
  long long result = n;
  for (long long p : prime_factors(n)) result -= result / p;
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> result;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result.push_back(n);
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long long n) {
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return cyclotomic_poly_locked(n);
}

// ---------------------------------------------------------------------------
// Cyclotomic

void Cyclotomic::canonicalize() {
  bool rational = true;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      rational = false;
      break;
    }
  }
  if (rational && conductor_ != 1) {
    BigRational c0 = std::move(coeffs_[0]);
    conductor_ = 1;
    coeffs_.assign(1, std::move(c0));
  }
}

Cyclotomic Cyclotomic::from_terms(long long conductor,
                                  const std::vector<std::pair<long long, BigRational>>& terms) {
  auto ctx = context(conductor);
  std::vector<BigRational> v(conductor, BigRational(0));
  for (const auto& [exp, coeff] : terms) {
    long long e = exp % conductor;
    if (e < 0) e += conductor;
    v[e] += coeff;
  }
  Cyclotomic result(conductor, reduce_mod_minpoly(*ctx, std::move(v)));
  result.canonicalize();
  return result;
}

Cyclotomic Cyclotomic::root_of_unity(long long n, long long k) {
  return from_terms(n, {{k, BigRational(1)}});
}

bool Cyclotomic::is_zero() const {
  for (const BigRational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const { return conductor_ == 1; }

std::optional<BigRational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<BigInt> Cyclotomic::as_integer() const {
  if (conductor_ != 1 || !is_integer(coeffs_[0])) return std::nullopt;
  return numerator(coeffs_[0]);
}

Cyclotomic Cyclotomic::with_conductor(long long n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) throw InternalError("conductor change must be to a multiple");
  auto ctx = context(n);
  const long long stretch = n / conductor_;
  std::vector<BigRational> v(n, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v[(i * stretch) % n] += coeffs_[i];
  Cyclotomic result(n, reduce_mod_minpoly(*ctx, std::move(v)));
  result.canonicalize();
  return result;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  const long long n = std::lcm(conductor_, rhs.conductor_);
  Cyclotomic a = with_conductor(n);
  const Cyclotomic b = rhs.with_conductor(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.canonicalize();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result = *this;
  for (BigRational& c : result.coeffs_) c = -c;
  return result;
}

Cyclotomic Cyclotomic::scaled(const BigRational& factor) const {
  if (factor == 0) return Cyclotomic();
  Cyclotomic result = *this;
  for (BigRational& c : result.coeffs_) c *= factor;
  return result;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  if (is_rational()) return rhs.scaled(coeffs_[0]);
  if (rhs.is_rational()) return scaled(rhs.coeffs_[0]);
  const long long n = std::lcm(conductor_, rhs.conductor_);
  const Cyclotomic a = with_conductor(n);
  const Cyclotomic b = rhs.with_conductor(n);
  auto ctx = context(n);
  std::vector<BigRational> v(n, BigRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      v[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic result(n, reduce_mod_minpoly(*ctx, std::move(v)));
  result.canonicalize();
  return result;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (conductor_ == 1) return *this;
  long long kk = k % conductor_;
  if (kk < 0) kk += conductor_;
  if (std::gcd(kk, conductor_) != 1) throw InvalidInput("galois exponent not coprime to conductor");
  auto ctx = context(conductor_);
  std::vector<BigRational> v(conductor_, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v[(i * kk) % conductor_] += coeffs_[i];
  Cyclotomic result(conductor_, reduce_mod_minpoly(*ctx, std::move(v)));
  result.canonicalize();
  return result;
}

Cyclotomic Cyclotomic::conjugate() const { return galois(conductor_ - 1); }

Cyclotomic Cyclotomic::norm_squared() const { return *this * conjugate(); }

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) throw InvalidInput("negative cyclotomic power");
  Cyclotomic acc(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::optional<long long> Cyclotomic::multiplicative_order() const {
  const Cyclotomic one(1);
  if (*this == one) return 1;
  if (norm_squared() != one) return std::nullopt;
  const long long bound = std::lcm<long long>(2, conductor_);
  Cyclotomic power = *this;
  for (long long m = 1; m <= bound; ++m) {
    if (power == one) return m;
    power *= *this;
  }
  return std::nullopt;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  const long long n = std::lcm(a.conductor_, b.conductor_);
  const Cyclotomic ua = a.with_conductor(n);
  const Cyclotomic ub = b.with_conductor(n);
  for (size_t i = 0; i < ua.coeffs_.size(); ++i) {
    if (ua.coeffs_[i] != ub.coeffs_[i]) return ua.coeffs_[i] > ub.coeffs_[i] ? -1 : 1;
  }
  return 0;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  if (conductor_ == rhs.conductor_) return coeffs_ == rhs.coeffs_;
  return compare(*this, rhs) == 0;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_to_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigRational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out << rational_to_string(c);
    } else {
      if (c != 1) out << rational_to_string(c) << "*";
      out << "E(" << conductor_ << ")^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

struct TermParser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  BigInt parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw InvalidInput("expected integer in cyclotomic literal: " + text);
    BigInt value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? BigInt(-value) : value;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
  TermParser p{text};
  Cyclotomic total(0);
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.pos >= p.text.size()) {
      if (first) throw InvalidInput("empty cyclotomic literal");
      break;
    }
    bool neg = false;
    if (!first) {
      if (p.eat('+')) {
        neg = false;
      } else if (p.eat('-')) {
        neg = true;
      } else {
        throw InvalidInput("expected '+' or '-' in cyclotomic literal: " + text);
      }
    } else if (p.eat('-')) {
      neg = true;
    }
    first = false;
    p.skip_ws();
    BigRational coeff(1);
    bool have_coeff = false;
    if (p.pos < p.text.size() && std::isdigit(static_cast<unsigned char>(p.text[p.pos]))) {
      BigInt num = p.parse_int();
      BigInt den = 1;
      if (p.eat('/')) den = p.parse_int();
      if (den <= 0) throw InvalidInput("bad denominator in cyclotomic literal: " + text);
      coeff = BigRational(num, den);
      have_coeff = true;
    }
    long long n = 1, k = 0;
    bool have_root = false;
    const bool star = have_coeff && p.eat('*');
    p.skip_ws();
    if (p.pos < p.text.size() && p.text[p.pos] == 'E') {
      ++p.pos;
      if (!p.eat('(')) throw InvalidInput("expected '(' after E: " + text);
      n = static_cast<long long>(p.parse_int());
      if (!p.eat(')')) throw InvalidInput("expected ')' in cyclotomic literal: " + text);
      k = p.eat('^') ? static_cast<long long>(p.parse_int()) : 1;
      have_root = true;
      if (n < 1) throw InvalidInput("root order must be positive: " + text);
    } else if (star || !have_coeff) {
      throw InvalidInput("expected term in cyclotomic literal: " + text);
    }
    if (neg) coeff = -coeff;
    total += have_root ? root_of_unity(n, k).scaled(coeff) : Cyclotomic(coeff);
  }
  return total;
}

}  // namespace pichar
