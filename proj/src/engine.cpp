#include "glw/engine.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "base64.hpp"
#include "glw/errors.hpp"
#include "glw/poly_json.hpp"

namespace glw {

namespace {

const Polynomial& poly_n() {
  static const Polynomial p(Generator::n());
  return p;
}

const Polynomial& poly_c1() {
  static const Polynomial p(Generator::casimir(1));
  return p;
}

// Builds the permutation on the vertices of `kept` (increasing original
// labels) sending v to target(v), relabeled order-preservingly.
template <class Target>
Permutation contract(const std::vector<unsigned>& kept, std::size_t m, Target target) {
  std::vector<unsigned> new_label(m + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i)
    new_label[kept[i]] = static_cast<unsigned>(i + 1);
  std::vector<unsigned> images;
  images.reserve(kept.size());
  for (unsigned v : kept) {
    unsigned t = target(v);
    if (t > m || new_label[t] == 0)
      throw std::logic_error("swap contraction produced an edge to a deleted vertex");
    images.push_back(new_label[t]);
  }
  return Permutation(std::move(images));
}

std::vector<unsigned> all_but(std::size_t m, std::initializer_list<unsigned> removed) {
  std::vector<unsigned> kept;
  for (unsigned v = 1; v <= m; ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end())
      kept.push_back(v);
  return kept;
}

} // namespace

SwapOutcome swap_step(const Permutation& p, unsigned k) {
  const std::size_t m = p.size();
  if (k < 1 || k >= m)
    throw DomainError("swap position " + std::to_string(k) + " out of range 1.." + std::to_string(m == 0 ? 0 : m - 1));
  const unsigned x = p(k);     // sigma(k)
  const unsigned y = p(k + 1); // sigma(k+1)
  if (x == k || y == k + 1)
    throw DomainError("swap at " + std::to_string(k) + " touches a fixed point of " + p.to_string());

  SwapOutcome out{p.conjugated_by_adjacent(k), {}};

  if (x == k + 1 && y == k)
    return out; // a 2-cycle on {k, k+1} is fixed by the swap; the bracket terms cancel

  if (y == k) {
    // sigma(k+1) = k. a = sigma^-1(k+1) is redirected to x.
    Permutation rho1 = contract(all_but(m, {k, k + 1}), m, [&](unsigned v) {
      unsigned t = p(v);
      return t == k + 1 ? x : t;
    });
    // Vertex k removed; k+1 becomes the merged vertex pointing to x.
    Permutation rho2 = contract(all_but(m, {k}), m, [&](unsigned v) { return v == k + 1 ? x : p(v); });
    out.merge_terms.emplace_back(poly_c1(), std::move(rho1));
    out.merge_terms.emplace_back(-poly_n(), std::move(rho2));
    return out;
  }

  if (x == k + 1) {
    // sigma(k) = k+1. Contract the edge k -> k+1.
    Permutation rho1 = contract(all_but(m, {k + 1}), m, [&](unsigned v) { return v == k ? y : p(v); });
    // Both removed; b = sigma^-1(k) is redirected to y.
    Permutation rho2 = contract(all_but(m, {k, k + 1}), m, [&](unsigned v) {
      unsigned t = p(v);
      return t == k ? y : t;
    });
    out.merge_terms.emplace_back(poly_n(), std::move(rho1));
    out.merge_terms.emplace_back(-poly_c1(), std::move(rho2));
    return out;
  }

  // Generic case. Both terms delete k+1 and keep a merged vertex at k.
  // tau1: merged -> y, a = sigma^-1(k+1) -> x.
  Permutation tau1 = contract(all_but(m, {k + 1}), m, [&](unsigned v) {
    if (v == k)
      return y;
    unsigned t = p(v);
    return t == k + 1 ? x : t;
  });
  // tau2: merged (incoming from a) -> x, b = sigma^-1(k) -> y.
  Permutation tau2 = contract(all_but(m, {k + 1}), m, [&](unsigned v) {
    if (v == k)
      return x;
    unsigned t = p(v);
    if (t == k)
      return y;
    return t == k + 1 ? k : t;
  });
  out.merge_terms.emplace_back(Polynomial(1L), std::move(tau1));
  out.merge_terms.emplace_back(Polynomial(-1L), std::move(tau2));
  return out;
}

NormalFormPlan plan_normal_form(const Permutation& p, Strategy strategy) {
  const std::size_t m = p.size();
  auto cycles = p.cycles();
  if (strategy == Strategy::ReversedCycleOrder)
    std::reverse(cycles.begin(), cycles.end());

  // target_pos[v] = position that v occupies in the normal form
  std::vector<unsigned> target_pos(m + 1, 0);
  unsigned next = 1;
  std::vector<unsigned> images(m, 0);
  for (const auto& cyc : cycles) {
    const unsigned offset = next - 1;
    for (unsigned v : cyc)
      target_pos[v] = next++;
    for (unsigned i = 0; i < cyc.size(); ++i)
      images[offset + i] = offset + (i + 1) % static_cast<unsigned>(cyc.size()) + 1;
  }

  NormalFormPlan plan{Permutation(std::move(images)), {}};
  std::vector<unsigned> arr(target_pos.begin() + 1, target_pos.end());
  if (m < 2)
    return plan;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    if (strategy == Strategy::BubbleRightToLeft) {
      for (std::size_t i = m - 1; i-- > 0;) {
        if (arr[i] > arr[i + 1]) {
          std::swap(arr[i], arr[i + 1]);
          plan.word.push_back(static_cast<unsigned>(i + 1));
          swapped = true;
        }
      }
    } else {
      for (std::size_t i = 0; i + 1 < m; ++i) {
        if (arr[i] > arr[i + 1]) {
          std::swap(arr[i], arr[i + 1]);
          plan.word.push_back(static_cast<unsigned>(i + 1));
          swapped = true;
        }
      }
    }
  }
  return plan;
}

// ---------------------------------------------------------------- MemoCache

std::optional<Polynomial> MemoCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end())
    return std::nullopt;
  return it->second;
}

void MemoCache::insert(const std::string& key, const Polynomial& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = map_.emplace(key, value);
  if (!inserted && !(it->second == value))
    throw std::logic_error("memo cache: conflicting values for one key");
}

std::size_t MemoCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void MemoCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

void MemoCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<std::string, Polynomial>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(map_.begin(), map_.end());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write cache file " + path.string());
  nlohmann::ordered_json header = {{"format", "glw-wgl-cache"}, {"version", format_version}};
  out << header.dump() << "\n";
  for (const auto& [key, value] : entries) {
    nlohmann::ordered_json rec = {{"key", detail::base64_encode(key)}, {"value", polynomial_to_json(value)}};
    out << rec.dump() << "\n";
  }
}

std::shared_ptr<MemoCache> MemoCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read cache file " + path.string());
  auto cache = std::make_shared<MemoCache>();
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + what);
  };
  if (!std::getline(in, line))
    fail("missing header line");
  ++lineno;
  try {
    auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "glw-wgl-cache")
      fail("not a wgl cache file");
    if (header.value("version", -1) != format_version)
      fail("unsupported cache version");
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("bad header: ") + e.what());
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    try {
      auto rec = nlohmann::ordered_json::parse(line);
      if (!rec.contains("key") || !rec["key"].is_string() || !rec.contains("value"))
        fail("record needs \"key\" and \"value\"");
      auto bytes = detail::base64_decode(rec["key"].get<std::string>());
      if (!bytes)
        fail("key is not valid base64");
      CanonicalKey key{*bytes};
      Permutation p = permutation_from_key(key);
      if (p.has_fixed_point())
        fail("cached permutation has a fixed point");
      Polynomial value = polynomial_from_json(rec["value"]);
      if (!value.uses_only({Generator::Kind::N, Generator::Kind::C}))
        fail("cached value uses generators other than N and C");
      if (!value.has_integer_coefficients())
        fail("cached value has non-integer coefficients");
      // Top weighted-degree part must be the product of C over cycle lengths.
      const unsigned top = p.size();
      Polynomial leading;
      for (const auto& [mono, c] : value.terms())
        if (mono.weighted_c_degree() == top)
          leading += Polynomial(mono, c);
      if (value.max_weighted_c_degree() != top || !(leading == cycle_type_monomial(p)))
        fail("cached value has the wrong leading term");
      cache->insert(key.bytes, value);
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind(path.string(), 0) == 0)
        throw;
      fail(e.what());
    } catch (const DomainError& e) {
      fail(e.what());
    } catch (const nlohmann::json::exception& e) {
      fail(e.what());
    } catch (const std::logic_error& e) {
      fail(e.what());
    }
  }
  return cache;
}

// ------------------------------------------------------------------- Engine

Engine::Engine(EngineOptions options, std::shared_ptr<MemoCache> cache)
    : options_(options), cache_(cache ? std::move(cache) : std::make_shared<MemoCache>()) {}

EngineStats Engine::stats() const {
  return {block_evaluations_.load(), cache_hits_.load(), swaps_.load(), max_depth_.load()};
}

std::string Engine::key_of(const Permutation& block) const {
  if (options_.rotation_memo)
    return canonical_key(block).bytes;
  std::string raw = "raw:";
  raw.push_back(static_cast<char>(block.size()));
  raw.append(block.raw().begin(), block.raw().end());
  return raw;
}

Polynomial Engine::wgl(const Permutation& p) { return evaluate(p, 0); }

Polynomial Engine::evaluate(const Permutation& p, std::size_t depth) {
  std::size_t seen = max_depth_.load();
  while (depth > seen && !max_depth_.compare_exchange_weak(seen, depth)) {
  }
  auto [fixed, reduced] = strip_fixed_points(p);
  Polynomial result = Polynomial(Generator::casimir(1), static_cast<unsigned>(fixed));
  if (fixed == 0)
    result = Polynomial(1L);
  for (const auto& block : split_blocks(reduced))
    result *= evaluate_block(block, depth);
  return result;
}

Polynomial Engine::evaluate_block(const Permutation& block, std::size_t depth) {
  if (block.is_standard_cycle())
    return Polynomial(Generator::casimir(static_cast<unsigned>(block.size())));

  const std::string key = key_of(block);
  if (auto hit = cache_->find(key)) {
    ++cache_hits_;
    return *hit;
  }
  ++block_evaluations_;

  const NormalFormPlan plan = plan_normal_form(block, options_.strategy);

  // w(block) = w(target) + sum of merge contributions along the word.
  // prefix[j] holds the merge sum accumulated before step j.
  Polynomial merged;
  std::vector<std::pair<Permutation, Polynomial>> visited;
  Permutation current = block;
  std::optional<Polynomial> tail;
  for (unsigned k : plan.word) {
    if (options_.cache_intermediates && !visited.empty()) {
      if (auto hit = cache_->find(key_of(current))) {
        ++cache_hits_;
        tail = std::move(*hit);
        break;
      }
    }
    if (options_.cache_intermediates)
      visited.emplace_back(current, merged);
    SwapOutcome step = swap_step(current, k);
    ++swaps_;
    for (const auto& [scalar, smaller] : step.merge_terms)
      merged += scalar * evaluate(smaller, depth + 1);
    current = std::move(step.swapped);
  }
  if (!tail)
    tail = evaluate(current, depth + 1);
  Polynomial value = merged + *tail;

  cache_->insert(key, value);
  if (options_.cache_intermediates) {
    for (const auto& [perm, before] : visited)
      cache_->insert(key_of(perm), value - before);
  }
  return value;
}

Polynomial wgl(const Permutation& p, MemoCache& cache) {
  // Non-owning alias so the caller's cache receives all entries.
  Engine engine({}, std::shared_ptr<MemoCache>(&cache, [](MemoCache*) {}));
  return engine.wgl(p);
}

Polynomial set_c1_zero(const Polynomial& p) {
  return poly_substitute(p, {{Generator::casimir(1), Polynomial()}});
}

Polynomial wsl(const Permutation& p) {
  Engine engine;
  return set_c1_zero(engine.wgl(p));
}

Polynomial cycle_type_monomial(const Permutation& p) {
  std::vector<Monomial::Factor> factors;
  for (unsigned len : p.cycle_lengths())
    factors.emplace_back(Generator::casimir(len), 1);
  return Polynomial(Monomial::from_factors(std::move(factors)), Rational(1));
}

} // namespace glw
