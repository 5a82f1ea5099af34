#include "nsum/sequence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nsum {

Sequence Sequence::from_multiplicities(GroupSpec g, std::vector<int> mult) {
  if (static_cast<int>(mult.size()) != g.order()) {
    fail(Errc::invalid_spec, "multiplicity vector size " + std::to_string(mult.size()) +
                                 " does not match group order " + std::to_string(g.order()));
  }
  Sequence s(std::move(g));
  long long len = 0;
  for (int m : mult) {
    if (m < 0) fail(Errc::invalid_spec, "negative multiplicity");
    len += m;
  }
  if (len > std::numeric_limits<int>::max()) fail(Errc::invalid_spec, "sequence too long");
  s.mult_ = std::move(mult);
  s.length_ = static_cast<int>(len);
  return s;
}

Sequence Sequence::from_elements(const GroupSpec& g, std::span<const int> elems) {
  Sequence s(g);
  for (int e : elems) {
    g.check_element(e);
    ++s.mult_[e];
  }
  s.length_ = static_cast<int>(elems.size());
  return s;
}

Sequence Sequence::repeated(const GroupSpec& g, int code, int count) {
  if (count < 0) fail(Errc::invalid_spec, "negative multiplicity");
  g.check_element(code);
  Sequence s(g);
  s.mult_[code] = count;
  s.length_ = count;
  return s;
}

int Sequence::max_multiplicity() const {
  int h = 0;
  for (int m : mult_) h = std::max(h, m);
  return h;
}

GroupSubset Sequence::support() const {
  GroupSubset s(group_);
  for (int c = 0; c < group_.order(); ++c) {
    if (mult_[c] > 0) s.insert(c);
  }
  return s;
}

int Sequence::support_size() const {
  int t = 0;
  for (int m : mult_) t += (m > 0);
  return t;
}

int Sequence::sum() const {
  int acc = 0;
  for (int c = 0; c < group_.order(); ++c) {
    if (mult_[c] > 0) acc = group_.add(acc, group_.scalar_mul(mult_[c], c));
  }
  return acc;
}

bool Sequence::squarefree() const {
  for (int m : mult_) {
    if (m > 1) return false;
  }
  return true;
}

Sequence Sequence::concat(const Sequence& T) const {
  if (!(group_ == T.group_)) fail(Errc::group_mismatch, "concat of sequences over different groups");
  std::vector<int> mult = mult_;
  for (int c = 0; c < group_.order(); ++c) mult[c] += T.mult_[c];
  return from_multiplicities(group_, std::move(mult));
}

bool Sequence::divides(const Sequence& S) const {
  if (!(group_ == S.group_)) fail(Errc::group_mismatch, "divisibility of sequences over different groups");
  for (int c = 0; c < group_.order(); ++c) {
    if (mult_[c] > S.mult_[c]) return false;
  }
  return true;
}

Sequence Sequence::remove(const Sequence& T) const {
  if (!(group_ == T.group_)) fail(Errc::group_mismatch, "remove of sequences over different groups");
  std::vector<int> mult = mult_;
  for (int c = 0; c < group_.order(); ++c) {
    mult[c] -= T.mult_[c];
    if (mult[c] < 0) {
      fail(Errc::not_a_subsequence, "multiplicity underflow at element code " + std::to_string(c));
    }
  }
  return from_multiplicities(group_, std::move(mult));
}

Sequence Sequence::translate(int g) const {
  group_.check_element(g);
  std::vector<int> mult(group_.order());
  for (int x = 0; x < group_.order(); ++x) mult[x] = mult_[group_.add(x, g)];
  return from_multiplicities(group_, std::move(mult));
}

Sequence Sequence::plus_element(int code, int count) const {
  if (count < 0) fail(Errc::invalid_spec, "negative multiplicity");
  group_.check_element(code);
  std::vector<int> mult = mult_;
  mult[code] += count;
  return from_multiplicities(group_, std::move(mult));
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  return __builtin_add_overflow(a, b, &s) ? std::numeric_limits<std::uint64_t>::max() : s;
}

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

}  // namespace

std::uint64_t multiset_count(int order, int length) {
  if (length < 0) fail(Errc::invalid_spec, "negative length");
  if (length == 0) return 1;
  if (order == 0) return 0;
  // C(order + length - 1, length) by the Pascal row, saturating.
  std::vector<std::uint64_t> row(length + 1, 0);
  row[0] = 1;
  int n = order + length - 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, length); j >= 1; --j) row[j] = sat_add(row[j], row[j - 1]);
  }
  return row[length];
}

SequenceStream::SequenceStream(GroupSpec g, int length) : group_(std::move(g)), length_(length) {
  if (length < 0) fail(Errc::invalid_spec, "negative length");
  // Binomial table C(n, j) for n <= order + length - 1, j <= length, saturating.
  int nmax = group_.order() + length_;  // one row of headroom
  binom_.assign(static_cast<std::size_t>(nmax + 1) * (length_ + 1), 0);
  for (int n = 0; n <= nmax; ++n) {
    binom_[static_cast<std::size_t>(n) * (length_ + 1)] = 1;
    for (int j = 1; j <= length_; ++j) {
      std::uint64_t v = 0;
      if (n > 0) {
        v = binom(n - 1, j);
        if (j <= n) v = sat_add(v, binom(n - 1, j - 1));
      }
      binom_[static_cast<std::size_t>(n) * (length_ + 1) + j] = v;
    }
  }
  total_ = multiset_count(group_.order(), length_);
  elems_.assign(length_, 0);
  mult_.assign(group_.order(), 0);
  rebuild_mult();
}

std::uint64_t SequenceStream::binom(int n, int j) const {
  if (j < 0 || j > length_ || n < 0) return 0;
  if (n > group_.order() + length_) fail(Errc::enumeration_overflow, "binomial index out of table");
  return binom_[static_cast<std::size_t>(n) * (length_ + 1) + j];
}

std::uint64_t SequenceStream::total() const {
  if (total_ == kSat) fail(Errc::enumeration_overflow, "enumeration exceeds 2^64-1 items");
  return total_;
}

void SequenceStream::rebuild_mult() {
  std::fill(mult_.begin(), mult_.end(), 0);
  for (int e : elems_) ++mult_[e];
}

void SequenceStream::seek(std::uint64_t rank) {
  std::uint64_t tot = total();
  if (rank > tot) fail(Errc::out_of_range, "seek rank beyond enumeration end");
  if (rank == tot) {
    done_ = true;
    rank_ = rank;
    return;
  }
  done_ = false;
  rank_ = rank;
  // Combinadic unranking: elems_[j] + j is the combination member c_j and
  // rank = sum_j C(c_j, j+1).
  std::uint64_t rem = rank;
  for (int j = length_ - 1; j >= 0; --j) {
    int c = group_.order() - 1 + j;
    while (binom(c, j + 1) > rem) --c;
    elems_[j] = c - j;
    rem -= binom(c, j + 1);
  }
  rebuild_mult();
}

bool SequenceStream::next(Sequence& out) {
  if (done_ || (length_ > 0 && group_.order() == 0)) return false;
  out = Sequence::from_multiplicities(group_, mult_);
  ++rank_;
  if (length_ == 0) {
    done_ = true;
    return true;
  }
  // Colex successor: find the first position that can grow, bump it, reset the
  // prefix to zero.
  int i = 0;
  while (i < length_) {
    bool can_grow = (i + 1 < length_) ? elems_[i] < elems_[i + 1] : elems_[i] < group_.order() - 1;
    if (can_grow) break;
    ++i;
  }
  if (i == length_) {
    done_ = true;
    return true;
  }
  for (int j = 0; j < i; ++j) {
    --mult_[elems_[j]];
    elems_[j] = 0;
  }
  mult_[0] += i;
  --mult_[elems_[i]];
  ++elems_[i];
  ++mult_[elems_[i]];
  return true;
}

std::vector<std::vector<int>> coordinate_permutations(const GroupSpec& g, std::size_t limit) {
  const auto& f = g.factors();
  int m = g.rank();
  // Permutations of coordinate indices preserving the factor at each slot.
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> code_perms;
  std::vector<int> coords(m), image(m);
  do {
    bool valid = true;
    for (int i = 0; i < m && valid; ++i) valid = f[perm[i]] == f[i];
    if (!valid) continue;
    if (code_perms.size() >= limit) {
      fail(Errc::enumeration_overflow, "too many coordinate permutations for this group");
    }
    std::vector<int> table(g.order());
    for (int code = 0; code < g.order(); ++code) {
      for (int i = 0; i < m; ++i) coords[i] = g.coordinate(code, i);
      for (int i = 0; i < m; ++i) image[i] = coords[perm[i]];
      table[code] = g.encode(image);
    }
    code_perms.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return code_perms;
}

bool is_auto_minimal(const Sequence& S) {
  const GroupSpec& g = S.group();
  const auto& f = g.factors();
  bool repeated = false;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) repeated |= f[i] == f[i + 1];
  if (!repeated) return true;

  auto perms = coordinate_permutations(g);
  const auto& mult = S.multiplicities();
  std::vector<int> inv(g.order());
  for (const auto& perm : perms) {
    // S^perm has multiplicity mult[inv[y]] at code y; compare in colex order
    // (first difference walking codes downward decides). S is kept iff it is
    // <= every image.
    for (int x = 0; x < g.order(); ++x) inv[perm[x]] = x;
    for (int y = g.order() - 1; y >= 0; --y) {
      int own = mult[y];
      int img = mult[inv[y]];
      if (own != img) {
        if (own > img) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace nsum
