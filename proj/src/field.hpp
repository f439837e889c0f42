#ifndef PPG_FIELD_HPP
#define PPG_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppg {

// Element of GF(p^k), encoded as an integer in [0, q): the base-p digits
// are the coefficients of the residue polynomial, constant term first.
using felt = std::uint32_t;

class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};
class BoundError : public std::runtime_error {
public:
  explicit BoundError(const std::string& m) : std::runtime_error(m) {}
};
// Internal consistency check failed; indicates a bug in this library.
class CheckError : public std::runtime_error {
public:
  explicit CheckError(const std::string& m) : std::runtime_error(m) {}
};

class Field {
public:
  // Interned: one instance per (p, k), valid for the process lifetime.
  static const Field& get(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  // Coefficients of the defining polynomial x^k + c_{k-1}x^{k-1} + ... + c_0
  // over the prime field, constant term first (without the leading 1).
  const std::vector<unsigned>& modulus_coeffs() const { return mod_; }

  felt zero() const { return 0; }
  felt one() const { return 1; }
  // The residue class of x (equals the chosen multiplicative generator only
  // by accident); primitive_element() is a generator of the unit group.
  felt primitive_element() const { return gen_; }

  felt add(felt a, felt b) const {
    if (addt_) return addt_[a * q_ + b];
    return add_slow(a, b);
  }
  felt neg(felt a) const { return negt_[a]; }
  felt sub(felt a, felt b) const { return add(a, neg(b)); }
  felt mul(felt a, felt b) const {
    if (mult_) return mult_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    return expt_[(logt_[a] + logt_[b]) % (q_ - 1)];
  }
  felt inv(felt a) const {
    if (a == 0) throw InputError("division by zero in GF(" + std::to_string(q_) + ")");
    return expt_[(q_ - 1 - logt_[a]) % (q_ - 1)];
  }
  felt div(felt a, felt b) const { return mul(a, inv(b)); }

  felt pow(felt a, long long e) const;
  // Discrete log with respect to primitive_element(); a must be nonzero.
  unsigned dlog(felt a) const {
    if (a == 0) throw InputError("dlog of zero");
    return logt_[a];
  }
  felt exp(unsigned long long e) const { return expt_[e % (q_ - 1)]; }

  felt frobenius(felt a) const { return pow(a, p_); }
  // The unique y with y^(p^n) = x.
  felt frobenius_root(felt x, unsigned n) const;

  bool element_valid(unsigned long long v) const { return v < q_; }

private:
  Field(unsigned p, unsigned k);
  felt add_slow(felt a, felt b) const;
  felt mul_poly(felt a, felt b) const;  // table-free polynomial multiplication

  unsigned p_, k_, q_;
  std::vector<unsigned> mod_;
  felt gen_ = 0;
  std::vector<felt> expt_, logt_, negt_;
  std::vector<felt> add_store_, mul_store_;
  const felt* addt_ = nullptr;  // q*q tables, built for small q only
  const felt* mult_ = nullptr;
};

bool is_prime(unsigned n);

}  // namespace ppg

#endif
