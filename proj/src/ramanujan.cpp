#include "ramapoly/ramanujan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ramapoly/numtheory.hpp"

namespace ramapoly {

namespace {

std::uint64_t reduce_mod(std::uint64_t n, std::int64_t k) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r);
}

// Per-modulus state shared by row generation; factors n once.
struct CnContext {
  std::uint64_t n;
  Factorization fac;
  std::vector<std::uint64_t> pa;    // p^a per prime power
  std::vector<std::uint64_t> pam1;  // p^{a-1}
  std::vector<std::uint64_t> divs;  // divisors of n, ascending
  std::vector<std::int64_t> d_mu_nd;    // d * mu(n/d) per divisor
  std::vector<std::uint64_t> div_phi;   // phi(d) per divisor
  std::vector<int> div_mu;              // mu(d) per divisor

  explicit CnContext(std::uint64_t n_) : n(n_), fac(factorize(n_)) {
    for (const auto& [p, a] : fac) {
      pa.push_back(ipow(p, a));
      pam1.push_back(ipow(p, a - 1));
    }
    divs = divisors_from(fac);
    d_mu_nd.reserve(divs.size());
    div_phi.reserve(divs.size());
    div_mu.reserve(divs.size());
    for (std::uint64_t d : divs) {
      Factorization fd = factorize(d);
      div_phi.push_back(totient_from(fd));
      div_mu.push_back(mobius_from(fd));
    }
    for (std::size_t i = 0; i < divs.size(); ++i) {
      std::uint64_t co = n / divs[i];
      // mu(n/d): n/d is also a divisor; look it up.
      std::size_t j =
          std::lower_bound(divs.begin(), divs.end(), co) - divs.begin();
      d_mu_nd.push_back(static_cast<std::int64_t>(divs[i]) * div_mu[j]);
    }
  }

  std::size_t divisor_index(std::uint64_t d) const {
    return std::lower_bound(divs.begin(), divs.end(), d) - divs.begin();
  }

  std::int64_t multiplicative(std::uint64_t k) const {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (k % pa[i] == 0) {
        prod *= static_cast<std::int64_t>(pa[i] - pam1[i]);
      } else if (k % pam1[i] == 0) {
        prod *= -static_cast<std::int64_t>(pam1[i]);
      } else {
        return 0;
      }
    }
    return prod;
  }

  std::int64_t mobius_sum(std::uint64_t k) const {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      // d | gcd(n, k) iff d | n and d | k; k = 0 picks up every divisor.
      if (k % divs[i] == 0) sum += d_mu_nd[i];
    }
    return sum;
  }

  std::int64_t holder(std::uint64_t k) const {
    std::uint64_t g = k == 0 ? n : std::gcd(n, k);
    std::size_t j = divisor_index(n / g);
    int mu = div_mu[j];
    if (mu == 0) return 0;
    std::uint64_t phi_n = div_phi.back();
    std::uint64_t phi_m = div_phi[j];
    if (phi_n % phi_m != 0)
      throw std::logic_error("c_holder: non-integral reduction");
    return static_cast<std::int64_t>(phi_n / phi_m) * mu;
  }
};

}  // namespace

Int c_mobius(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::domain_error("c_mobius: n must be >= 1");
  return Int(CnContext(n).mobius_sum(reduce_mod(n, k)));
}

Int c_holder(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::domain_error("c_holder: n must be >= 1");
  return Int(CnContext(n).holder(reduce_mod(n, k)));
}

Int c_multiplicative(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::domain_error("c_multiplicative: n must be >= 1");
  return Int(CnContext(n).multiplicative(reduce_mod(n, k)));
}

RamanujanRow row(std::uint64_t n, bool cross_check) {
  if (n == 0) throw std::domain_error("row: n must be >= 1");
  CnContext ctx(n);
  RamanujanRow r;
  r.modulus = n;
  r.values.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::int64_t v = ctx.multiplicative(k);
    if (cross_check) {
      std::int64_t vm = ctx.mobius_sum(k);
      std::int64_t vh = ctx.holder(k);
      if (v != vm || v != vh) {
        std::ostringstream os;
        os << "ramanujan row cross-check mismatch at n=" << n << " k=" << k
           << ": multiplicative=" << v << " mobius=" << vm << " holder=" << vh;
        throw std::logic_error(os.str());
      }
    }
    r.values.emplace_back(v);
  }
  // Row invariants.
  std::uint64_t phi_n = ctx.div_phi.back();
  if (r.values[0] != phi_n)
    throw std::logic_error("ramanujan row: c_n(0) != phi(n)");
  Int sum = 0;
  for (const Int& v : r.values) sum += v;
  if (n > 1 && sum != 0)
    throw std::logic_error("ramanujan row: values do not sum to zero");
  for (std::uint64_t k = 1; k < n; ++k) {
    if (r.values[k] != r.values[n - k])
      throw std::logic_error("ramanujan row: symmetry violated");
  }
  return r;
}

}  // namespace ramapoly
