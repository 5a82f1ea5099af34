#include "nsum/group.hpp"

#include <algorithm>
#include <numeric>

namespace nsum {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::invalid_element: return "invalid-element";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::not_a_subsequence: return "not-a-subsequence";
    case Errc::empty_set: return "empty-set";
    case Errc::set_too_small: return "set-too-small";
    case Errc::out_of_range: return "out-of-range";
    case Errc::empty_sequence: return "empty-sequence";
    case Errc::sequence_too_short: return "sequence-too-short";
    case Errc::no_witness: return "no-witness";
    case Errc::precondition: return "precondition-not-met";
    case Errc::condition1: return "condition-1";
    case Errc::trace_failure: return "trace-failure";
    case Errc::parse: return "parse-error";
    case Errc::stale_checkpoint: return "stale-checkpoint";
    case Errc::enumeration_overflow: return "enumeration-overflow";
    case Errc::io: return "io-error";
    case Errc::usage: return "usage-error";
  }
  return "error";
}

GroupSpec GroupSpec::from_factors(std::vector<int> f, int max_order) {
  for (int d : f) {
    if (d < 2) fail(Errc::invalid_spec, "group factor must be >= 2, got " + std::to_string(d));
  }
  long long order = 1;
  for (int d : f) {
    order *= d;
    if (order > max_order) {
      fail(Errc::invalid_spec,
           "group order exceeds the configured limit " + std::to_string(max_order));
    }
  }

  // Pairwise gcd/lcm passes converge to the invariant-factor chain; factors
  // that collapse to 1 drop out (e.g. [2,3] -> [6]).
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        int g = std::gcd(f[i], f[j]);
        if (g != f[i]) {
          int l = f[i] / g * f[j];
          f[i] = g;
          f[j] = l;
          changed = true;
        }
      }
    }
  }
  std::erase(f, 1);
  std::sort(f.begin(), f.end());

  GroupSpec spec;
  spec.factors_ = std::move(f);
  spec.strides_.resize(spec.factors_.size());
  int stride = 1;
  for (std::size_t i = 0; i < spec.factors_.size(); ++i) {
    spec.strides_[i] = stride;
    stride *= spec.factors_[i];
  }
  spec.order_ = stride;
  return spec;
}

void GroupSpec::check_element(int code) const {
  if (code < 0 || code >= order_) {
    fail(Errc::invalid_element,
         "element code " + std::to_string(code) + " out of range [0, " +
             std::to_string(order_) + ")");
  }
}

int GroupSpec::add(int a, int b) const {
  check_element(a);
  check_element(b);
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int d = factors_[i];
    int s = strides_[i];
    int ci = (a / s + b / s) % d;
    out += ci * s;
  }
  return out;
}

int GroupSpec::neg(int a) const {
  check_element(a);
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int d = factors_[i];
    int s = strides_[i];
    int ci = (d - (a / s) % d) % d;
    out += ci * s;
  }
  return out;
}

int GroupSpec::scalar_mul(long long c, int a) const {
  check_element(a);
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int d = factors_[i];
    int s = strides_[i];
    long long ci = (c % d) * ((a / s) % d) % d;
    if (ci < 0) ci += d;
    out += static_cast<int>(ci) * s;
  }
  return out;
}

int GroupSpec::element_order(int a) const {
  check_element(a);
  long long ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int d = factors_[i];
    int ci = (a / strides_[i]) % d;
    int o = d / std::gcd(d, ci == 0 ? d : ci);
    ord = std::lcm(ord, static_cast<long long>(o));
  }
  return static_cast<int>(ord);
}

int GroupSpec::encode(std::span<const int> coords) const {
  if (coords.size() != factors_.size()) {
    fail(Errc::invalid_element, "coordinate count " + std::to_string(coords.size()) +
                                    " does not match group rank " +
                                    std::to_string(factors_.size()));
  }
  int code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors_[i]) {
      fail(Errc::invalid_element, "coordinate " + std::to_string(coords[i]) +
                                      " out of range [0, " + std::to_string(factors_[i]) + ")");
    }
    code += coords[i] * strides_[i];
  }
  return code;
}

std::vector<int> GroupSpec::decode(int code) const {
  check_element(code);
  std::vector<int> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = (code / strides_[i]) % factors_[i];
  }
  return coords;
}

int GroupSpec::coordinate(int code, int i) const {
  check_element(code);
  return (code / strides_[i]) % factors_[i];
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// All partitions of e as descending part lists.
std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

}  // namespace

std::vector<GroupSpec> groups_of_order(int n, int max_order) {
  if (n < 1) fail(Errc::invalid_spec, "group order must be >= 1, got " + std::to_string(n));
  if (n > max_order) {
    fail(Errc::invalid_spec, "group order exceeds the configured limit " + std::to_string(max_order));
  }
  if (n == 1) return {GroupSpec()};

  auto primes = factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  per_prime.reserve(primes.size());
  for (auto [p, e] : primes) per_prime.push_back(partitions(e));

  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    // Assemble invariant factors: the r-th largest factor takes the r-th
    // largest exponent of each prime.
    std::size_t m = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) m = std::max(m, per_prime[i][pick[i]].size());
    std::vector<int> factors(m, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& parts = per_prime[i][pick[i]];
      for (std::size_t r = 0; r < parts.size(); ++r) {
        int q = 1;
        for (int t = 0; t < parts[r]; ++t) q *= primes[i].first;
        factors[r] *= q;
      }
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(GroupSpec::from_factors(std::move(factors), max_order));

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == per_prime[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }

  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.factors() < b.factors();
  });
  return out;
}

}  // namespace nsum
