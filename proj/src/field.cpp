#include "field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ppg {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomial over GF(p), coefficients mod p, constant term first.
using PPoly = std::vector<unsigned>;

PPoly ppoly_from_code(unsigned long long code, unsigned p, unsigned deg) {
  PPoly c(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = unsigned(code % p);
    code /= p;
  }
  c[deg] = 1;  // monic
  return c;
}

// Remainder of a by b (b monic), both over GF(p).
PPoly ppoly_mod(PPoly a, const PPoly& b, unsigned p) {
  int db = int(b.size()) - 1;
  for (int i = int(a.size()) - 1; i >= db; --i) {
    unsigned c = a[size_t(i)] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      unsigned sub = (c * b[size_t(j)]) % p;
      unsigned& t = a[size_t(i - db + j)];
      t = (t + p * p - sub) % p;
    }
  }
  while (a.size() > 1 && a.back() % p == 0) a.pop_back();
  for (auto& c : a) c %= p;
  return a;
}

bool ppoly_is_zero(const PPoly& a) {
  for (unsigned c : a)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool ppoly_irreducible(const PPoly& f, unsigned p) {
  unsigned deg = unsigned(f.size()) - 1;
  if (deg == 1) return true;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
      PPoly g = ppoly_from_code(code, p, d);
      if (ppoly_is_zero(ppoly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("extension degree must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 24)) throw BoundError("field too large: p^k exceeds 2^24");
  }
  q_ = unsigned(q);

  // Lexicographically least irreducible: smallest integer code of the
  // non-leading coefficient vector, so serialized elements are stable.
  mod_.assign(k, 0);
  if (k == 1) {
    mod_[0] = 0;  // x - 0 over GF(p); arithmetic is plain mod p
  } else {
    bool found = false;
    unsigned long long count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (unsigned long long code = 0; code < count && !found; ++code) {
      PPoly f = ppoly_from_code(code, p, k);
      if (ppoly_irreducible(f, p)) {
        for (unsigned i = 0; i < k; ++i) mod_[i] = f[i];
        found = true;
      }
    }
    if (!found) throw CheckError("no irreducible polynomial found");
  }

  negt_.resize(q_);
  for (felt a = 0; a < q_; ++a) {
    felt r = 0, pw = 1;
    felt x = a;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned d = x % p_;
      x /= p_;
      r += felt((p_ - d) % p_) * pw;
      pw *= p_;
    }
    negt_[a] = r;
  }

  // Find a generator of the unit group, then fill exp/log tables.
  std::vector<unsigned> prime_factors;
  {
    unsigned m = q_ - 1;
    for (unsigned d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
        break;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  auto pow_slow = [&](felt a, unsigned long long e) {
    felt r = 1;
    felt b = a;
    while (e) {
      if (e & 1) r = mul_poly(r, b);
      b = mul_poly(b, b);
      e >>= 1;
    }
    return r;
  };
  for (felt g = 1; g < q_; ++g) {
    bool prim = true;
    for (unsigned r : prime_factors)
      if (pow_slow(g, (q_ - 1) / r) == 1) {
        prim = false;
        break;
      }
    if (prim && (q_ == 2 || pow_slow(g, q_ - 1) == 1)) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw CheckError("no primitive element found");

  expt_.resize(q_ - 1);
  logt_.assign(q_, 0);
  felt cur = 1;
  for (unsigned e = 0; e < q_ - 1; ++e) {
    expt_[e] = cur;
    logt_[cur] = e;
    cur = mul_poly(cur, gen_);
  }
  if (cur != 1) throw CheckError("unit group order mismatch");

  if (q_ <= 256) {
    add_store_.resize(size_t(q_) * q_);
    mul_store_.resize(size_t(q_) * q_);
    for (felt a = 0; a < q_; ++a)
      for (felt b = 0; b < q_; ++b) {
        add_store_[size_t(a) * q_ + b] = add_slow(a, b);
        mul_store_[size_t(a) * q_ + b] = mul_poly(a, b);
      }
    addt_ = add_store_.data();
    mult_ = mul_store_.data();
  }
}

felt Field::add_slow(felt a, felt b) const {
  felt r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned s = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    r += felt(s) * pw;
    pw *= p_;
  }
  return r;
}

felt Field::mul_poly(felt a, felt b) const {
  if (a == 0 || b == 0) return 0;
  // schoolbook product, then reduce by the defining polynomial
  std::vector<unsigned> da(k_), db(k_), prod(2 * k_ - 1, 0);
  felt x = a;
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = x % p_;
    x /= p_;
  }
  x = b;
  for (unsigned i = 0; i < k_; ++i) {
    db[i] = x % p_;
    x /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int i = int(2 * k_ - 2); i >= int(k_); --i) {
    unsigned c = prod[size_t(i)];
    if (c == 0) continue;
    prod[size_t(i)] = 0;
    // x^k = -mod_ : substitute
    for (unsigned j = 0; j < k_; ++j) {
      unsigned sub = (c * mod_[j]) % p_;
      unsigned idx = unsigned(i) - k_ + j;
      prod[idx] = (prod[idx] + p_ - sub % p_) % p_;
    }
  }
  felt r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += felt(prod[i] % p_) * pw;
    pw *= p_;
  }
  return r;
}

felt Field::pow(felt a, long long e) const {
  if (a == 0) {
    if (e < 0) throw InputError("zero to negative power");
    return e == 0 ? 1 : 0;
  }
  long long m = q_ - 1;
  long long r = e % m;
  if (r < 0) r += m;
  return expt_[(logt_[a] + felt(0), (unsigned long long)(logt_[a]) * 0 + (unsigned long long)r * 0 + 0) % (q_ - 1) == 0 && false ? 0 : (unsigned)(((unsigned long long)logt_[a] * (unsigned long long)r) % (q_ - 1))];
}

felt Field::frobenius_root(felt x, unsigned n) const {
  if (x == 0) return 0;
  // y = x^(p^(k - n mod k)) satisfies y^(p^n) = x^(p^k) = x
  unsigned m = n % k_;
  felt y = x;
  for (unsigned i = 0; i < (k_ - m) % k_; ++i) y = pow(y, p_);
  return y;
}

const Field& Field::get(unsigned p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, k))).first;
  return *it->second;
}

}  // namespace ppg
