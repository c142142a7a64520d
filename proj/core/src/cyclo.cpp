#include "minroots/cyclo.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "minroots/error.hpp"

namespace minroots {

namespace {

using BigPoly = std::vector<BigInt>;

void trim(BigPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic b.
BigPoly divide_monic(BigPoly a, const BigPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  BigPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const BigInt f = a[k];
    if (f == 0) continue;
    q[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= f * b[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw InvariantError("cyclotomic division left a remainder");
  return q;
}

BigPoly mul(const BigPoly& a, const BigPoly& b) {
  BigPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

BigPoly derivative(const BigPoly& p) {
  if (p.size() <= 1) return {0};
  BigPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

// Remainder of a by b, scaled by a positive constant so that signs of values
// are preserved (Sturm sequences only need signs).
BigPoly positive_pseudo_rem(BigPoly a, const BigPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt lc = b.back();
  const BigInt alc = abs(lc);
  const int slc = lc > 0 ? 1 : -1;
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt f = a.back();
    for (auto& x : a) x *= alc;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= slc * f * b[i];
    a.pop_back();
    trim(a);
  }
  BigInt g = 0;
  for (const auto& x : a) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

bool is_zero_poly(const BigPoly& p) { return p.size() == 1 && p[0] == 0; }

// Sign of p at num * 2^-exp, evaluated as 2^{exp deg p} p(num 2^-exp).
int sign_at(const BigPoly& p, const BigInt& num, unsigned exp) {
  BigInt acc = 0;
  BigInt scale = 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * scale;
    if (i > 0) scale <<= exp;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int variations(const std::vector<BigPoly>& seq, const BigInt& num, unsigned exp) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, num, exp);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

#ifdef MINROOTS_WIDE_COEFFS
constexpr const char* kWidthHint = "";
#else
constexpr const char* kWidthHint = "; rebuild with -DMINROOTS_WIDE_COEFFS=ON for 128-bit coefficients";
#endif

Coeff to_coeff(const BigInt& v, unsigned level) {
  if (v > BigInt(std::numeric_limits<Coeff>::max()) || v < BigInt(std::numeric_limits<Coeff>::min()))
    throw OverflowError("minimal polynomial of level " + std::to_string(level) +
                        " does not fit the coefficient width" + kWidthHint);
  return static_cast<Coeff>(v);
}

[[noreturn]] void overflow() {
  throw OverflowError(std::string("ring coefficient overflow") + kWidthHint);
}

Coeff cadd(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}
Coeff csub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}
Coeff cmul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::string coeff_to_string(Coeff v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  // Work in the negative range so the minimum value is handled.
  Coeff x = neg ? v : -v;
  while (x != 0) {
    s.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

Coeff parse_coeff(std::string_view tok) {
  if (tok.empty()) throw ParseError("empty ring coefficient");
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-' || tok[0] == '+') {
    neg = tok[0] == '-';
    i = 1;
  }
  if (i == tok.size()) throw ParseError("malformed ring coefficient '" + std::string(tok) + "'");
  Coeff v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError("malformed ring coefficient '" + std::string(tok) + "'");
    Coeff r;
    if (__builtin_mul_overflow(v, Coeff{10}, &r) || __builtin_sub_overflow(r, Coeff{tok[i] - '0'}, &v))
      throw ParseError("ring coefficient out of range '" + std::string(tok) + "'");
  }
  if (!neg) {
    if (v == std::numeric_limits<Coeff>::min()) throw ParseError("ring coefficient out of range");
    v = -v;
  }
  return v;
}

double to_double_down(const BigInt& num, unsigned exp) {
  double d = num.convert_to<double>();
  d = std::ldexp(d, -static_cast<int>(exp));
  return std::nextafter(std::nextafter(d, -INFINITY), -INFINITY);
}

double to_double_up(const BigInt& num, unsigned exp) {
  double d = num.convert_to<double>();
  d = std::ldexp(d, -static_cast<int>(exp));
  return std::nextafter(std::nextafter(d, INFINITY), INFINITY);
}

constexpr unsigned kCachedPrecision = 64;

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, BigPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  BigPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  trim(num);
  std::lock_guard lock(mu);
  memo.emplace(n, num);
  return num;
}

std::vector<BigInt> minimal_polynomial(unsigned level) {
  if (level == 0) throw std::invalid_argument("level must be positive");
  if (level == 1) level = 3;
  const BigPoly phi = cyclotomic_polynomial(2 * level);
  const std::size_t d = (phi.size() - 1) / 2;
  // Dickson-style polynomials D_k(x) = z^k + z^-k in x = z + 1/z.
  std::vector<BigPoly> dk{{2}, {0, 1}};
  for (std::size_t k = 2; k <= d; ++k) {
    BigPoly next = mul({0, 1}, dk[k - 1]);
    for (std::size_t i = 0; i < dk[k - 2].size(); ++i) next[i] -= dk[k - 2][i];
    trim(next);
    dk.push_back(next);
  }
  BigPoly psi(d + 1, 0);
  psi[0] = phi[d];
  for (std::size_t k = 1; k <= d; ++k) {
    const BigInt& a = phi[d + k];
    for (std::size_t i = 0; i < dk[k].size(); ++i) psi[i] += a * dk[k][i];
  }
  trim(psi);
  return psi;
}

// ---------------------------------------------------------------------------
// BaseRing

std::shared_ptr<const BaseRing> BaseRing::get(unsigned level) {
  if (level == 0) throw std::invalid_argument("ring level must be positive");
  if (level == 1) level = 3;
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const BaseRing>> rings;
  std::lock_guard lock(mu);
  auto& slot = rings[level];
  if (!slot) slot = std::make_shared<const BaseRing>(level);
  return slot;
}

BaseRing::BaseRing(unsigned level) : level_(level == 1 ? 3 : level) {
  psi_big_ = minimal_polynomial(level_);
  for (const auto& c : psi_big_) psi_.push_back(to_coeff(c, level_));
  const std::size_t d = degree();

  // x^{d+j} mod psi for j = 0..d-2.
  if (d >= 2) {
    BigPoly cur(d, 0);
    for (std::size_t i = 0; i < d; ++i) cur[i] = -psi_big_[i];  // x^d
    for (std::size_t j = 0; j + 2 <= d; ++j) {
      std::vector<Coeff> row;
      for (const auto& c : cur) row.push_back(to_coeff(c, level_));
      reduction_.push_back(row);
      // multiply by x and reduce
      const BigInt top = cur[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * psi_big_[i];
      cur[0] = -top * psi_big_[0];
    }
  }

  if (d == 1) {
    interval_ = {-psi_big_[0], -psi_big_[0], 0};
    return;
  }

  // Isolate the largest root of psi in (-2, 2] with a Sturm sequence, then
  // narrow by bisection on the sign of psi. The largest conjugate is c itself.
  std::vector<BigPoly> sturm{psi_big_, derivative(psi_big_)};
  while (!is_zero_poly(sturm.back()) && sturm.back().size() > 1) {
    BigPoly r = positive_pseudo_rem(sturm[sturm.size() - 2], sturm.back());
    for (auto& x : r) x = -x;
    if (is_zero_poly(r)) break;
    sturm.push_back(r);
  }
  auto roots_in = [&](const BigInt& a, unsigned ea, const BigInt& b, unsigned eb) {
    return variations(sturm, a, ea) - variations(sturm, b, eb);
  };
  BigInt lo = -2, hi = 2;
  unsigned exp = 0;
  while (roots_in(lo, exp, hi, exp) > 1) {
    lo <<= 1;
    hi <<= 1;
    ++exp;
    const BigInt mid = (lo + hi) / 2;
    if (roots_in(mid, exp, hi, exp) >= 1) lo = mid;
    else hi = mid;
  }
  while (exp < kCachedPrecision) {
    lo <<= 1;
    hi <<= 1;
    ++exp;
    const BigInt mid = (lo + hi) / 2;
    if (psi_sign_at(mid, exp) > 0) hi = mid;
    else lo = mid;
  }
  interval_ = {lo, hi, exp};
}

int BaseRing::psi_sign_at(const BigInt& num, unsigned exp) const { return sign_at(psi_big_, num, exp); }

RingElem BaseRing::zero() const { return RingElem(this, RingElem::Coeffs(degree(), 0)); }

RingElem BaseRing::one() const { return constant(1); }

RingElem BaseRing::constant(Coeff n) const {
  RingElem::Coeffs c(degree(), 0);
  c[0] = n;
  return RingElem(this, std::move(c));
}

RingElem BaseRing::generator() const {
  if (degree() == 1) return constant(-psi_[0]);
  RingElem::Coeffs c(degree(), 0);
  c[1] = 1;
  return RingElem(this, std::move(c));
}

RingElem BaseRing::two_cos(unsigned k) const {
  RingElem prev = constant(2);
  if (k == 0) return prev;
  RingElem cur = generator();
  const RingElem x = generator();
  for (unsigned i = 1; i < k; ++i) {
    RingElem next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RingElem BaseRing::embed(unsigned m) const {
  if (m == 2) return zero();
  if (m == 3) return one();
  if (m == 0 || level_ % m != 0)
    throw std::invalid_argument("order " + std::to_string(m) + " does not divide ring level " + std::to_string(level_));
  return two_cos(level_ / m);
}

RingElem BaseRing::link_weight(std::uint32_t m) const {
  if (m == std::numeric_limits<std::uint32_t>::max()) return constant(2);
  return embed(m);
}

RingElem BaseRing::promote(const RingElem& e) const {
  const BaseRing* src = e.ring();
  if (src == this) return e;
  if (src->degree() == 1) return constant(e[0]);
  if (level_ % src->level() != 0)
    throw std::invalid_argument("cannot promote level " + std::to_string(src->level()) + " into level " +
                                std::to_string(level_));
  const RingElem g = two_cos(level_ / src->level());
  RingElem acc = zero();
  for (std::size_t i = e.coeffs().size(); i-- > 0;) acc = acc * g + constant(e[i]);
  return acc;
}

RingElem BaseRing::from_coeffs(const std::vector<Coeff>& coeffs) const {
  const std::size_t d = degree();
  if (coeffs.size() <= d) {
    RingElem::Coeffs c(d, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    if (d == 1) return constant(c[0]);
    return RingElem(this, std::move(c));
  }
  // Horner in the ring handles arbitrary length.
  const RingElem x = generator();
  RingElem acc = zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + constant(coeffs[i]);
  return acc;
}

RingElem BaseRing::parse(std::string_view text) const {
  if (text.rfind("poly", 0) != 0) return constant(parse_coeff(text));
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("malformed ring element '" + std::string(text) + "'");
  const std::string_view lvl = text.substr(4, colon - 4);
  if (std::to_string(level_) != lvl)
    throw ParseError("ring element '" + std::string(text) + "' is not in level " + std::to_string(level_));
  std::vector<Coeff> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_coeff(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (coeffs.size() != degree())
    throw ParseError("ring element '" + std::string(text) + "' has the wrong number of coefficients");
  return from_coeffs(coeffs);
}

RingElem BaseRing::add(const RingElem& a, const RingElem& b) const {
  RingElem::Coeffs c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = cadd(a[i], b[i]);
  return RingElem(this, std::move(c));
}

RingElem BaseRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem::Coeffs c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = csub(a[i], b[i]);
  return RingElem(this, std::move(c));
}

RingElem BaseRing::mul(const RingElem& a, const RingElem& b) const {
  const std::size_t d = degree();
  if (d == 1) return constant(cmul(a[0], b[0]));
  boost::container::small_vector<Coeff, 8> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b[j] != 0) prod[i + j] = cadd(prod[i + j], cmul(a[i], b[j]));
  }
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    const Coeff t = prod[k];
    if (t == 0) continue;
    const auto& row = reduction_[k - d];
    for (std::size_t i = 0; i < d; ++i)
      if (row[i] != 0) prod[i] = cadd(prod[i], cmul(t, row[i]));
  }
  RingElem::Coeffs c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  return RingElem(this, std::move(c));
}

int BaseRing::sign(const RingElem& e) const {
  if (e.is_zero()) return 0;
  const std::size_t d = degree();
  if (d == 1) return e[0] > 0 ? 1 : -1;

  // Floating filter. For polynomials with nonnegative coefficients and x >= 0,
  // Horner evaluation has relative error below 2d u; the bound below leaves a
  // wide margin. lo_d <= c <= hi_d is guaranteed by outward rounding.
  {
    const double lo_d = to_double_down(interval_.lo, interval_.exp);
    const double hi_d = to_double_up(interval_.hi, interval_.exp);
    constexpr double kTwo53 = 9007199254740992.0;
    bool exact_coeffs = lo_d >= 0.0;
    double p_lo = 0, p_hi = 0, n_lo = 0, n_hi = 0;
    for (std::size_t i = d; i-- > 0 && exact_coeffs;) {
      const Coeff ci = e[i];
      const double mag = static_cast<double>(ci < 0 ? -ci : ci);
      if (mag >= kTwo53) exact_coeffs = false;
      p_lo = p_lo * lo_d + (ci > 0 ? mag : 0.0);
      p_hi = p_hi * hi_d + (ci > 0 ? mag : 0.0);
      n_lo = n_lo * lo_d + (ci < 0 ? mag : 0.0);
      n_hi = n_hi * hi_d + (ci < 0 ? mag : 0.0);
    }
    if (exact_coeffs) {
      const double gamma = static_cast<double>(8 * d + 16) * std::numeric_limits<double>::epsilon();
      if (p_lo * (1 - gamma) > n_hi * (1 + gamma)) return 1;
      if (p_hi * (1 + gamma) < n_lo * (1 - gamma)) return -1;
    }
  }

  // Exact path: value interval over a local copy of the isolating interval,
  // refined until it excludes zero.
  BigInt lo = interval_.lo, hi = interval_.hi;
  unsigned exp = interval_.exp;
  auto eval = [&](const BigInt& x, bool positive_part) {
    BigInt acc = 0;
    BigInt scale = 1;
    for (std::size_t i = d; i-- > 0;) {
      const Coeff ci = e[i];
      const bool take = positive_part ? ci > 0 : ci < 0;
      BigInt term = 0;
      if (take) term = ci < 0 ? -BigInt(ci) : BigInt(ci);
      acc = acc * x + term * scale;
      if (i > 0) scale <<= exp;
    }
    return acc;
  };
  for (;;) {
    const BigInt lower = eval(lo, true) - eval(hi, false);
    if (lower > 0) return 1;
    const BigInt upper = eval(hi, true) - eval(lo, false);
    if (upper < 0) return -1;
    lo <<= 1;
    hi <<= 1;
    ++exp;
    const BigInt mid = (lo + hi) / 2;
    if (psi_sign_at(mid, exp) > 0) hi = mid;
    else lo = mid;
  }
}

// ---------------------------------------------------------------------------
// RingElem

bool RingElem::is_zero() const {
  for (Coeff v : c_)
    if (v != 0) return false;
  return true;
}

bool RingElem::is_constant() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool RingElem::equals_integer(Coeff n) const { return !c_.empty() && c_[0] == n && is_constant(); }

RingElem RingElem::operator+(const RingElem& o) const { return ring_->add(*this, o); }
RingElem RingElem::operator-(const RingElem& o) const { return ring_->sub(*this, o); }
RingElem RingElem::operator*(const RingElem& o) const { return ring_->mul(*this, o); }
RingElem RingElem::operator-() const { return ring_->sub(ring_->zero(), *this); }

RingElem RingElem::scaled(Coeff n) const {
  Coeffs c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = cmul(c_[i], n);
  return RingElem(ring_, std::move(c));
}

int RingElem::sign() const { return ring_->sign(*this); }

std::string RingElem::to_string() const {
  if (is_constant()) return coeff_to_string(c_[0]);
  std::string s = "poly" + std::to_string(ring_->level()) + ":";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += coeff_to_string(c_[i]);
  }
  return s;
}

}  // namespace minroots
