#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are encoded canonically as integers in [0, q): the coefficient
// vector of the polynomial-basis representative, read base p with the
// constant coefficient least significant. Prime-subfield elements therefore
// encode as themselves, and the element x (the class of the indeterminate)
// encodes as p.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace unitcodes {

using Rep = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over the prime field GF(p), coefficients low-degree first.
using PrimePoly = std::vector<Rep>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Rep inv_mod_p(Rep a, Rep p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<Rep>(r);
}

/// Remainder of a modulo b over GF(p); b must be nonzero.
inline PrimePoly prime_poly_mod(PrimePoly a, PrimePoly b, Rep p) {
  trim(a);
  trim(b);
  const Rep lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = f * b[i] % p;
      a[shift + i] = static_cast<Rep>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& f_in, Rep p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      PrimePoly g(d + 1, 0);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Rep>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (prime_poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class FieldElement;
struct FieldExtension;

/// GF(p^m) with a fixed monic irreducible modulus. Cheap to copy; all copies
/// share one immutable set of lookup tables.
class Field {
 public:
  /// GF(2).
  Field() : Field(gf(2)) {}

  static Field gf(std::uint32_t p, std::uint32_t m = 1) { return gf(p, m, default_modulus(p, m)); }

  /// User-supplied modulus (low-degree coefficient first, monic, degree m).
  static Field gf(std::uint32_t p, std::uint32_t m, std::vector<Rep> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) throw std::invalid_argument("field order exceeds " + std::to_string(kMaxOrder));
    }
    if (modulus.size() != m + 1 || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(m));
    for (Rep c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");

    static std::mutex mutex;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<Rep>>, std::shared_ptr<const Impl>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(p, m, modulus);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(p, m, std::move(modulus))).first;
    return Field(it->second);
  }

  /// Parses `gf(p)`, `gf(p^m)` or `gf(p^m; modulus=[c0,c1,...,1])`.
  static Field parse(std::string_view text);

  /// The documented modulus for (p, m): a fixed table for the fields used
  /// throughout, otherwise the smallest monic irreducible in canonical order.
  static std::vector<Rep> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return {0, 1};
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Rep>> table = {
        {{2, 2}, {1, 1, 1}},                    // x^2+x+1
        {{2, 3}, {1, 1, 0, 1}},                 // x^3+x+1
        {{2, 4}, {1, 1, 0, 0, 1}},              // x^4+x+1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},           // x^5+x^2+1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},        // x^6+x+1
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},     // x^7+x+1
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},  // x^8+x^4+x^3+x^2+1
        {{3, 2}, {1, 0, 1}},                    // x^2+1
        {{3, 3}, {1, 2, 0, 1}},                 // x^3+2x+1
        {{5, 2}, {2, 0, 1}},                    // x^2+2
        {{7, 2}, {1, 0, 1}},                    // x^2+1
        {{13, 2}, {2, 0, 1}},                   // x^2+2
    };
    if (auto it = table.find({p, m}); it != table.end()) return it->second;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<Rep> f(m + 1, 0);
      std::uint64_t rest = c;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<Rep>(rest % p);
        rest /= p;
      }
      f[m] = 1;
      if (f[0] != 0 && detail::is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  std::uint32_t characteristic() const noexcept { return impl_->p; }
  std::uint32_t degree() const noexcept { return impl_->m; }
  std::uint32_t order() const noexcept { return impl_->q; }
  const std::vector<Rep>& modulus() const noexcept { return impl_->modulus; }
  bool has_default_modulus() const { return impl_->modulus == default_modulus(impl_->p, impl_->m); }

  std::string literal() const {
    std::string s = "gf(" + std::to_string(impl_->p);
    if (impl_->m > 1) s += "^" + std::to_string(impl_->m);
    if (!has_default_modulus()) {
      s += "; modulus=[";
      for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(impl_->modulus[i]);
      }
      s += "]";
    }
    return s + ")";
  }

  bool contains(Rep a) const noexcept { return a < impl_->q; }

  Rep add(Rep a, Rep b) const {
    const Impl& f = *impl_;
    if (f.m == 1) {
      const Rep s = a + b;
      return s >= f.p ? s - f.p : s;
    }
    if (!f.add_table.empty()) return f.add_table[std::size_t{a} * f.q + b];
    Rep out = 0, place = 1;
    for (std::uint32_t i = 0; i < f.m; ++i) {
      out += ((a % f.p + b % f.p) % f.p) * place;
      a /= f.p;
      b /= f.p;
      place *= f.p;
    }
    return out;
  }
  Rep neg(Rep a) const { return impl_->neg[a]; }
  Rep sub(Rep a, Rep b) const { return add(a, neg(b)); }
  Rep mul(Rep a, Rep b) const {
    if (a == 0 || b == 0) return 0;
    const Impl& f = *impl_;
    return f.exp[f.log[a] + f.log[b]];
  }
  Rep inv(Rep a) const {
    if (a == 0) throw std::domain_error("division by zero in " + literal());
    const Impl& f = *impl_;
    return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
  }
  Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
  Rep pow(Rep a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const Impl& f = *impl_;
    return f.exp[(std::uint64_t{f.log[a]} * (e % (f.q - 1))) % (f.q - 1)];
  }
  /// Image of an integer in the prime subfield.
  Rep from_int(long long v) const {
    const long long p = impl_->p;
    return static_cast<Rep>(((v % p) + p) % p);
  }
  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Rep a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    const std::uint32_t n = impl_->q - 1;
    return n / std::gcd(impl_->log[a], n);
  }
  Rep primitive_element() const noexcept { return impl_->primitive; }

  FieldElement element(Rep a) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus);
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

 private:
  struct Impl {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<Rep> modulus;
    std::vector<Rep> exp;  // length 2(q-1)
    std::vector<Rep> log;  // log[0] unused
    std::vector<Rep> neg;
    std::vector<Rep> add_table;  // only for small extension fields
    Rep primitive = 1;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::vector<Rep> digits(Rep a, std::uint32_t p, std::uint32_t m) {
    std::vector<Rep> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  static Rep undigits(const std::vector<Rep>& d, std::uint32_t p) {
    Rep out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
    return out;
  }

  // Schoolbook polynomial product reduced by the modulus; used only while
  // building the log tables.
  static Rep slow_mul(Rep a, Rep b, const Impl& f) {
    const auto da = digits(a, f.p, f.m), db = digits(b, f.p, f.m);
    detail::PrimePoly prod(2 * f.m, 0);
    for (std::uint32_t i = 0; i < f.m; ++i)
      for (std::uint32_t j = 0; j < f.m; ++j)
        prod[i + j] = static_cast<Rep>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % f.p);
    auto r = detail::prime_poly_mod(prod, f.modulus, f.p);
    r.resize(f.m, 0);
    return undigits(r, f.p);
  }

  static Rep slow_pow(Rep a, std::uint64_t e, const Impl& f) {
    Rep r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a, f);
      a = slow_mul(a, a, f);
      e >>= 1;
    }
    return r;
  }

  static std::shared_ptr<const Impl> build(std::uint32_t p, std::uint32_t m, std::vector<Rep> modulus) {
    auto f = std::make_shared<Impl>();
    f->p = p;
    f->m = m;
    f->modulus = std::move(modulus);
    f->q = 1;
    for (std::uint32_t i = 0; i < m; ++i) f->q *= p;
    const std::uint32_t q = f->q;

    f->neg.resize(q);
    for (Rep a = 0; a < q; ++a) {
      auto d = digits(a, p, m);
      for (auto& c : d) c = (p - c) % p;
      f->neg[a] = undigits(d, p);
    }

    if (q == 2) {
      f->primitive = 1;
    } else {
      const auto factors = detail::prime_factors(q - 1);
      for (Rep g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto l : factors)
          if (slow_pow(g, (q - 1) / l, *f) == 1) {
            primitive = false;
            break;
          }
        if (primitive) {
          f->primitive = g;
          break;
        }
      }
    }
    f->exp.resize(2 * std::size_t{q - 1});
    f->log.assign(q, 0);
    Rep x = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      f->exp[k] = x;
      f->log[x] = k;
      x = slow_mul(x, f->primitive, *f);
    }
    for (std::uint32_t k = q - 1; k < 2 * (q - 1); ++k) f->exp[k] = f->exp[k - (q - 1)];

    if (m > 1 && q <= 1024) {
      f->add_table.resize(std::size_t{q} * q);
      for (Rep a = 0; a < q; ++a) {
        const auto da = digits(a, p, m);
        for (Rep b = 0; b < q; ++b) {
          auto db = digits(b, p, m);
          for (std::uint32_t i = 0; i < m; ++i) db[i] = (da[i] + db[i]) % p;
          f->add_table[std::size_t{a} * q + b] = undigits(db, p);
        }
      }
    }
    return f;
  }

  std::shared_ptr<const Impl> impl_;
};

/// A field element carrying its field. Used at API boundaries; bulk storage
/// (matrices, polynomials) keeps bare reps alongside a single Field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, Rep rep) : field_(std::move(field)), rep_(rep) {
    if (!field_.contains(rep_)) throw std::out_of_range("element rep " + std::to_string(rep) + " outside " + field_.literal());
  }

  const Field& field() const noexcept { return field_; }
  Rep rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.add(a.rep_, b.rep_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.sub(a.rep_, b.rep_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.rep_, b.rep_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.div(a.rep_, b.rep_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(rep_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(rep_, e)}; }
  FieldElement inverse() const { return {field_, field_.inv(rep_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rep_ == b.rep_ && a.field_ == b.field_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_)
      throw std::invalid_argument("mismatched fields: " + a.field_.literal() + " vs " + b.field_.literal());
  }

  Field field_;
  Rep rep_ = 0;
};

inline FieldElement Field::element(Rep a) const { return {*this, a}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

inline Field Field::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Field {
    throw std::invalid_argument("bad field literal '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.rfind("gf(", 0) != 0 || s.back() != ')') return fail("expected gf(...)");
  s = s.substr(3, s.size() - 4);
  std::string head = s, tail;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    head = s.substr(0, semi);
    tail = s.substr(semi + 1);
  }
  auto to_u32 = [&](const std::string& t) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) fail("expected an integer, got '" + t + "'");
    return v;
  };
  std::uint32_t p = 0, m = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = to_u32(head.substr(0, caret));
    m = to_u32(head.substr(caret + 1));
  } else {
    p = to_u32(head);
  }
  if (tail.empty()) return gf(p, m);
  if (tail.rfind("modulus=[", 0) != 0 || tail.back() != ']') return fail("expected modulus=[...]");
  std::vector<Rep> modulus;
  std::stringstream list(tail.substr(9, tail.size() - 10));
  for (std::string item; std::getline(list, item, ',');) modulus.push_back(to_u32(item));
  return gf(p, m, std::move(modulus));
}

/// Smallest-rep element of exact multiplicative order n.
inline FieldElement element_of_order(const Field& field, std::uint32_t n) {
  const std::uint32_t q1 = field.order() - 1;
  if (n == 0 || q1 % n != 0)
    throw std::domain_error("no element of order " + std::to_string(n) + " in " + field.literal() + ": " +
                            std::to_string(n) + " does not divide q-1 = " + std::to_string(q1));
  for (Rep a = 1; a < field.order(); ++a)
    if (field.multiplicative_order(a) == n) return field.element(a);
  throw std::logic_error("unreachable: cyclic group has an element of every order dividing q-1");
}

/// Smallest-rep i with i^2 = -1, or nothing.
inline std::optional<FieldElement> sqrt_minus_one(const Field& field) {
  const Rep minus_one = field.neg(1);
  for (Rep a = 1; a < field.order(); ++a)
    if (field.mul(a, a) == minus_one) return field.element(a);
  return std::nullopt;
}

/// GF(p^2m) together with an embedding of GF(p^m).
struct FieldExtension {
  Field base;
  Field extended;
  std::vector<Rep> embedding;  // embedding[a] is the image of base rep a

  Rep embed(Rep a) const { return embedding.at(a); }
  FieldElement embed(const FieldElement& a) const {
    if (a.field() != base) throw std::invalid_argument("element is not in the base field");
    return extended.element(embed(a.rep()));
  }
};

/// Quadratic extension for a field lacking a square root of -1.
inline FieldExtension quadratic_extension(const Field& base) {
  if (sqrt_minus_one(base)) throw std::domain_error(base.literal() + " already contains a square root of -1");
  const std::uint32_t p = base.characteristic(), m = base.degree();
  Field big = Field::gf(p, 2 * m);
  // Image of the base generator: smallest root in `big` of the base modulus.
  const auto& mod = base.modulus();
  Rep beta = 0;
  bool found = false;
  for (Rep b = 0; b < big.order() && !found; ++b) {
    Rep acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, b), big.from_int(mod[i]));
    if (acc == 0) {
      beta = b;
      found = true;
    }
  }
  if (!found) throw std::logic_error("base modulus has no root in the extension");
  FieldExtension ext{base, big, std::vector<Rep>(base.order())};
  for (Rep a = 0; a < base.order(); ++a) {
    Rep acc = 0, rest = a, power = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      acc = big.add(acc, big.mul(big.from_int(rest % p), power));
      rest /= p;
      power = big.mul(power, beta);
    }
    ext.embedding[a] = acc;
  }
  return ext;
}

}  // namespace unitcodes
