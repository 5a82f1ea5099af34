#include "nsum/literal.hpp"

#include <algorithm>
#include <cctype>

namespace nsum {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  void skip_ws() {
    while (!eof() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool consume(char c) {
    if (!eof() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected ") + what, pos);
  }

  long long integer() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected integer", pos);
    }
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000LL) throw ParseError("integer too large", pos);
      ++pos;
    }
    return v;
  }
};

std::vector<int> parse_factor_list(Cursor& cur, int max_order) {
  std::vector<int> factors;
  long long order = 1;
  while (true) {
    if (cur.eof() || (cur.peek() != 'Z' && cur.peek() != 'z')) {
      throw ParseError("expected group factor like Z8", cur.pos);
    }
    ++cur.pos;
    std::size_t at = cur.pos;
    long long d = cur.integer();
    if (d == 1 && factors.empty() && !(cur.peek() == 'x' || cur.peek() == 'X')) {
      return {};  // bare Z1: the trivial group
    }
    if (d < 2) throw ParseError("group factor must be >= 2", at);
    order *= d;
    if (order > max_order) {
      throw ParseError("group order exceeds the configured limit " + std::to_string(max_order), at);
    }
    factors.push_back(static_cast<int>(d));
    if (cur.peek() == 'x' || cur.peek() == 'X') {
      ++cur.pos;
      continue;
    }
    return factors;
  }
}

// Presentation element: integer code for rank <= 1 presentations, coordinate
// tuple otherwise. Returns presentation coordinates.
std::vector<int> parse_pres_element(Cursor& cur, const std::vector<int>& factors) {
  std::vector<int> coords;
  if (factors.size() <= 1) {
    std::size_t at = cur.pos;
    long long v = cur.integer();
    long long d = factors.empty() ? 1 : factors[0];
    if (v >= d) throw ParseError("element out of range for " + std::string(factors.empty() ? "Z1" : "Z" + std::to_string(d)), at);
    if (!factors.empty()) coords.push_back(static_cast<int>(v));
    return coords;
  }
  cur.expect('(', "'('");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    long long v = cur.integer();
    if (v >= factors[i]) throw ParseError("coordinate out of range for Z" + std::to_string(factors[i]), at);
    coords.push_back(static_cast<int>(v));
    cur.skip_ws();
    if (i + 1 < factors.size()) cur.expect(',', "','");
  }
  cur.expect(')', "')'");
  return coords;
}

}  // namespace

GroupPresentation GroupPresentation::from_factors(std::vector<int> factors, int max_order) {
  GroupPresentation pres;
  pres.canonical_ = GroupSpec::from_factors(factors, max_order);
  pres.given_ = std::move(factors);

  // Image of each presentation generator in the canonical group. Every
  // presentation factor splits into prime-power cyclic components; within one
  // prime, components sorted by descending exponent pair up with the
  // canonical factors sorted by descending size, and CRT lifts the component
  // generator into its canonical coordinate.
  const GroupSpec& canon = pres.canonical_;
  int m = canon.rank();
  pres.generator_images_.assign(pres.given_.size(), 0);

  // prime -> list of (presentation slot, exponent), sorted by exponent desc.
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> by_prime;
  for (std::size_t slot = 0; slot < pres.given_.size(); ++slot) {
    for (auto [p, e] : factorize(pres.given_[slot])) {
      auto it = std::find_if(by_prime.begin(), by_prime.end(),
                             [p = p](const auto& kv) { return kv.first == p; });
      if (it == by_prime.end()) {
        by_prime.push_back({p, {}});
        it = std::prev(by_prime.end());
      }
      it->second.emplace_back(static_cast<int>(slot), e);
    }
  }

  for (auto& [p, comps] : by_prime) {
    // Exponent descending; ties by slot descending so that a presentation
    // already in canonical ascending order maps through the identity.
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first > b.first;
    });
    for (std::size_t r = 0; r < comps.size(); ++r) {
      auto [slot, e] = comps[r];
      int canon_index = m - 1 - static_cast<int>(r);  // r-th largest canonical factor
      int d = canon.factors()[canon_index];
      int q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      // CRT inside Z_d: y = 1 mod q, y = 0 mod d/q.
      int rest = d / q;
      int y = 0;
      for (int cand = 0; cand < q; ++cand) {
        long long v = static_cast<long long>(cand) * rest;
        if (v % q == 1 % q) {
          y = static_cast<int>(v);
          break;
        }
      }
      std::vector<int> coords(m, 0);
      coords[canon_index] = y;
      pres.generator_images_[slot] =
          canon.add(pres.generator_images_[slot], canon.encode(coords));
    }
  }
  return pres;
}

GroupPresentation GroupPresentation::parse(std::string_view text, int max_order) {
  Cursor cur{text};
  cur.skip_ws();
  auto factors = parse_factor_list(cur, max_order);
  cur.skip_ws();
  if (!cur.eof()) throw ParseError("trailing input after group literal", cur.pos);
  return from_factors(std::move(factors), max_order);
}

int GroupPresentation::map_coords(std::span<const int> coords) const {
  if (coords.size() != given_.size()) {
    fail(Errc::invalid_element, "coordinate count does not match presentation");
  }
  int acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= given_[i]) {
      fail(Errc::invalid_element, "coordinate out of range");
    }
    acc = canonical_.add(acc, canonical_.scalar_mul(coords[i], generator_images_[i]));
  }
  return acc;
}

GroupSpec parse_group(std::string_view text, int max_order) {
  return GroupPresentation::parse(text, max_order).group();
}

std::string format_group(const GroupSpec& g) {
  if (g.trivial()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    if (i) out += 'x';
    out += 'Z';
    out += std::to_string(g.factors()[i]);
  }
  return out;
}

std::string format_element(const GroupSpec& g, int code) {
  g.check_element(code);
  if (g.rank() <= 1) return std::to_string(code);
  std::string out = "(";
  auto coords = g.decode(code);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  out += ')';
  return out;
}

Sequence parse_sequence(std::string_view text, int max_order) {
  Cursor cur{text};
  cur.skip_ws();
  auto factors = parse_factor_list(cur, max_order);
  auto pres = GroupPresentation::from_factors(factors, max_order);
  cur.skip_ws();
  cur.expect(':', "':' after group");

  std::vector<int> mult(pres.group().order(), 0);
  long long total = 0;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) break;
    auto coords = parse_pres_element(cur, factors);
    int code = pres.map_coords(coords);
    long long count = 1;
    if (cur.consume('^')) {
      std::size_t at = cur.pos;
      count = cur.integer();
      if (count == 0) throw ParseError("multiplicity must be >= 1", at);
    }
    total += count;
    if (total > 1'000'000) throw ParseError("sequence too long", cur.pos);
    mult[code] += static_cast<int>(count);
  }
  return Sequence::from_multiplicities(pres.group(), std::move(mult));
}

std::string format_sequence(const Sequence& S) {
  std::string out = format_group(S.group());
  out += ':';
  for (int c = 0; c < S.group().order(); ++c) {
    int m = S.multiplicities()[c];
    if (m == 0) continue;
    out += ' ';
    out += format_element(S.group(), c);
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

GroupSubset parse_subset(const GroupPresentation& pres, std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('{', "'{'");
  GroupSubset out(pres.group());
  cur.skip_ws();
  if (!cur.consume('}')) {
    while (true) {
      cur.skip_ws();
      auto coords = parse_pres_element(cur, pres.given_factors());
      out.insert(pres.map_coords(coords));
      cur.skip_ws();
      if (cur.consume('}')) break;
      cur.expect(',', "',' or '}'");
    }
  }
  cur.skip_ws();
  if (!cur.eof()) throw ParseError("trailing input after set literal", cur.pos);
  return out;
}

std::string format_subset(const GroupSubset& A) {
  std::string out = "{";
  bool first = true;
  A.each([&](int c) {
    if (!first) out += ',';
    first = false;
    out += format_element(A.group(), c);
  });
  out += '}';
  return out;
}

}  // namespace nsum
