#include "glw/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "glw/errors.hpp"

namespace glw {

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<unsigned> images) {
  const std::size_t m = images.size();
  if (m > max_size)
    throw DomainError("permutation size " + std::to_string(m) + " exceeds " + std::to_string(max_size));
  std::vector<bool> seen(m + 1, false);
  images_.reserve(m);
  for (unsigned v : images) {
    if (v < 1 || v > m)
      throw DomainError("image " + std::to_string(v) + " out of range 1.." + std::to_string(m));
    if (seen[v])
      throw DomainError("image " + std::to_string(v) + " repeated; not a bijection");
    seen[v] = true;
    images_.push_back(static_cast<Label>(v));
  }
}

Permutation Permutation::unchecked(std::vector<Label> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t m) {
  if (m > max_size)
    throw DomainError("permutation size exceeds " + std::to_string(max_size));
  std::vector<Label> v(m);
  for (std::size_t i = 0; i < m; ++i)
    v[i] = static_cast<Label>(i + 1);
  return unchecked(std::move(v));
}

unsigned Permutation::inverse_at(unsigned i) const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] == i)
      return static_cast<unsigned>(j + 1);
  throw DomainError("element " + std::to_string(i) + " not in permutation");
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(size() + 1, false);
  for (unsigned start = 1; start <= size(); ++start) {
    if (seen[start])
      continue;
    std::vector<unsigned> cyc;
    for (unsigned x = start; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<unsigned> Permutation::cycle_lengths() const {
  std::vector<unsigned> lengths;
  for (const auto& c : cycles())
    lengths.push_back(static_cast<unsigned>(c.size()));
  return lengths;
}

bool Permutation::is_involution() const {
  for (unsigned i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i)
      return false;
  return true;
}

bool Permutation::has_fixed_point() const {
  for (unsigned i = 1; i <= size(); ++i)
    if ((*this)(i) == i)
      return true;
  return false;
}

bool Permutation::is_standard_cycle() const {
  const std::size_t m = size();
  if (m == 0)
    return false;
  for (std::size_t i = 0; i < m; ++i)
    if (images_[i] != (i + 1) % m + 1)
      return false;
  return true;
}

Permutation Permutation::conjugated_by_adjacent(unsigned k) const {
  if (k < 1 || k >= size())
    throw DomainError("adjacent transposition position " + std::to_string(k) + " out of range");
  auto t = [k](unsigned x) -> unsigned { return x == k ? k + 1 : (x == k + 1 ? k : x); };
  std::vector<Label> v(size());
  for (unsigned i = 1; i <= size(); ++i)
    v[t(i) - 1] = static_cast<Label>(t((*this)(i)));
  return unchecked(std::move(v));
}

Permutation Permutation::rotated() const {
  const std::size_t m = size();
  std::vector<Label> v(m);
  // (r s r^-1)(r(i)) = r(s(i)), r(i) = i mod m + 1
  for (std::size_t i = 1; i <= m; ++i)
    v[i % m] = static_cast<Label>(images_[i - 1] % m + 1);
  return unchecked(std::move(v));
}

Permutation Permutation::concatenate(const Permutation& other) const {
  if (size() + other.size() > max_size)
    throw DomainError("concatenated permutation too large");
  std::vector<Label> v = images_;
  for (Label x : other.images_)
    v.push_back(static_cast<Label>(x + size()));
  return unchecked(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < images_.size(); ++i)
    os << (i ? "," : "") << unsigned(images_[i]);
  os << "]";
  return os.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2)
      continue;
    any = true;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ")";
  }
  if (!any)
    os << "()";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

// ------------------------------------------------------------ ChordDiagram

ChordDiagram::ChordDiagram(std::vector<Chord> pairs) {
  const std::size_t m = 2 * pairs.size();
  std::vector<bool> seen(m + 1, false);
  for (auto& [a, b] : pairs) {
    if (a > b)
      std::swap(a, b);
    for (unsigned x : {a, b}) {
      if (x < 1 || x > m)
        throw DomainError("chord endpoint " + std::to_string(x) + " out of range 1.." + std::to_string(m));
      if (seen[x])
        throw DomainError("chord endpoint " + std::to_string(x) + " used twice");
      seen[x] = true;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

ChordDiagram ChordDiagram::from_involution(const Permutation& p) {
  if (!p.is_involution() || p.has_fixed_point())
    throw DomainError(p.to_string() + " is not a fixed-point-free involution");
  std::vector<Chord> pairs;
  for (unsigned i = 1; i <= p.size(); ++i)
    if (i < p(i))
      pairs.emplace_back(i, p(i));
  return ChordDiagram(std::move(pairs));
}

std::string ChordDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    os << (i ? "," : "") << pairs_[i].first << "-" << pairs_[i].second;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChordDiagram& d) { return os << d.to_string(); }

// -------------------------------------------------------------- operations

Permutation perm_from_cycles(const std::vector<std::vector<unsigned>>& cycles, std::size_t m) {
  if (m > Permutation::max_size)
    throw DomainError("permutation size exceeds " + std::to_string(Permutation::max_size));
  std::vector<unsigned> images(m);
  for (unsigned i = 1; i <= m; ++i)
    images[i - 1] = i;
  std::vector<bool> used(m + 1, false);
  for (const auto& cyc : cycles) {
    for (unsigned x : cyc) {
      if (x < 1 || x > m)
        throw DomainError("cycle element " + std::to_string(x) + " out of range 1.." + std::to_string(m));
      if (used[x])
        throw DomainError("cycle element " + std::to_string(x) + " repeated");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(images));
}

Permutation chord_to_perm(const ChordDiagram& d) {
  std::vector<unsigned> images(2 * d.chord_count());
  for (const auto& [a, b] : d.chords()) {
    images[a - 1] = b;
    images[b - 1] = a;
  }
  return Permutation(std::move(images));
}

ChordDiagram make_kn(unsigned n) {
  if (n < 1)
    throw DomainError("K_n needs n >= 1");
  std::vector<ChordDiagram::Chord> pairs;
  for (unsigned i = 1; i <= n; ++i)
    pairs.emplace_back(i, n + i);
  return ChordDiagram(std::move(pairs));
}

CanonicalKey canonical_key(const Permutation& p) {
  const auto& raw = p.raw();
  std::string best(raw.begin(), raw.end());
  Permutation r = p;
  for (std::size_t i = 1; i < p.size(); ++i) {
    r = r.rotated();
    std::string cand(r.raw().begin(), r.raw().end());
    if (cand < best)
      best = std::move(cand);
  }
  CanonicalKey key;
  key.bytes.reserve(best.size() + 1);
  key.bytes.push_back(static_cast<char>(p.size()));
  key.bytes += best;
  return key;
}

Permutation permutation_from_key(const CanonicalKey& key) {
  if (key.bytes.empty())
    throw DomainError("canonical key is empty");
  const std::size_t m = static_cast<unsigned char>(key.bytes[0]);
  if (key.bytes.size() != m + 1)
    throw DomainError("canonical key length prefix does not match payload");
  std::vector<unsigned> images;
  for (std::size_t i = 1; i <= m; ++i)
    images.push_back(static_cast<unsigned char>(key.bytes[i]));
  Permutation p(std::move(images));
  if (!(canonical_key(p) == key))
    throw DomainError("canonical key is not the least rotation of its orbit");
  return p;
}

std::vector<Permutation> split_blocks(const Permutation& p) {
  std::vector<Permutation> blocks;
  const std::size_t m = p.size();
  std::size_t start = 1;
  std::size_t reach = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    // An interval [start, i] is closed once every element maps inside it;
    // for a bijection it suffices that the maximum image seen is i.
    reach = std::max<std::size_t>(reach, p(static_cast<unsigned>(i)));
    if (reach == i) {
      std::vector<unsigned> images;
      for (std::size_t j = start; j <= i; ++j)
        images.push_back(static_cast<unsigned>(p(static_cast<unsigned>(j)) - start + 1));
      blocks.emplace_back(std::move(images));
      start = i + 1;
    }
  }
  return blocks;
}

std::pair<std::size_t, Permutation> strip_fixed_points(const Permutation& p) {
  const std::size_t m = p.size();
  std::vector<unsigned> new_label(m + 1, 0);
  unsigned next = 0;
  for (unsigned i = 1; i <= m; ++i)
    if (p(i) != i)
      new_label[i] = ++next;
  std::vector<unsigned> images;
  images.reserve(next);
  for (unsigned i = 1; i <= m; ++i)
    if (p(i) != i)
      images.push_back(new_label[p(i)]);
  return {m - next, Permutation(std::move(images))};
}

// ----------------------------------------------------------------- parsing

namespace {

unsigned parse_uint(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  if (s.size() > 6)
    throw ParseError("number '" + std::string(s) + "' too large");
  return static_cast<unsigned>(std::stoul(std::string(s)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t size) {
  std::string_view s = trim(text);
  if (s.empty())
    return Permutation::identity(size);
  if (s.front() == '[') {
    if (s.back() != ']')
      throw ParseError("image notation must end with ']' in '" + std::string(s) + "'");
    std::string_view body = trim(s.substr(1, s.size() - 2));
    std::vector<unsigned> images;
    while (!body.empty()) {
      auto comma = body.find(',');
      images.push_back(parse_uint(trim(body.substr(0, comma)), s));
      if (comma == std::string_view::npos)
        break;
      body = body.substr(comma + 1);
    }
    if (size != 0 && size != images.size())
      throw ParseError("image notation has " + std::to_string(images.size()) + " entries but size is " +
                       std::to_string(size));
    return Permutation(std::move(images));
  }
  if (s.front() != '(')
    throw ParseError("expected '(' or '[' at '" + std::string(s.substr(0, 1)) + "'");
  std::vector<std::vector<unsigned>> cycles;
  std::size_t pos = 0;
  unsigned largest = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(')
      throw ParseError("expected '(' at '" + std::string(s.substr(pos, 1)) + "'");
    auto close = s.find(')', pos);
    if (close == std::string_view::npos)
      throw ParseError("unclosed cycle starting at '" + std::string(s.substr(pos)) + "'");
    std::string_view body = s.substr(pos + 1, close - pos - 1);
    std::vector<unsigned> cyc;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) && body[j] != ',')
        ++j;
      unsigned v = parse_uint(body.substr(i, j - i), s);
      if (v == 0)
        throw ParseError("cycle element 0 in '" + std::string(s) + "'; labels start at 1");
      largest = std::max(largest, v);
      cyc.push_back(v);
      i = j;
    }
    cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  std::size_t m = size != 0 ? size : largest;
  if (largest > m)
    throw ParseError("cycle element " + std::to_string(largest) + " exceeds size " + std::to_string(m));
  return perm_from_cycles(cycles, m);
}

ChordDiagram parse_chord_diagram(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && (s.front() == 'K' || s.front() == 'k')) {
    unsigned n = parse_uint(s.substr(1), s);
    if (n < 1)
      throw ParseError("K_n shorthand needs n >= 1 in '" + std::string(s) + "'");
    return make_kn(n);
  }
  std::vector<ChordDiagram::Chord> pairs;
  while (!s.empty()) {
    auto comma = s.find(',');
    std::string_view item = trim(s.substr(0, comma));
    auto dash = item.find('-');
    if (dash == std::string_view::npos)
      throw ParseError("chord '" + std::string(item) + "' must look like a-b");
    pairs.emplace_back(parse_uint(trim(item.substr(0, dash)), item), parse_uint(trim(item.substr(dash + 1)), item));
    if (comma == std::string_view::npos)
      break;
    s = s.substr(comma + 1);
  }
  return ChordDiagram(std::move(pairs));
}

} // namespace glw
