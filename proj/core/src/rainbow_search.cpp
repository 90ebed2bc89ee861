#include "rainbow_search.hpp"

#include <algorithm>
#include <string>

#include "rvc/errors.hpp"

namespace rvc::detail {

namespace {
constexpr int kDensePaletteLimit = 12;
constexpr std::size_t kDenseStateLimit = std::size_t{1} << 22;
}  // namespace

void require_palette_fits(int palette, const char* what) {
  if (palette > kMaxPalette) {
    throw SizeLimitError(std::string(what) + ": palette of " + std::to_string(palette) +
                         " colors exceeds the supported " + std::to_string(kMaxPalette));
  }
}

void StateSet::reset(int n, int palette) {
  palette_ = palette;
  const std::size_t states = (static_cast<std::size_t>(n) + 1) << std::min(palette, kDensePaletteLimit);
  dense_ = palette <= kDensePaletteLimit && states <= kDenseStateLimit;
  if (dense_) {
    if (stamp_.size() < states) {
      stamp_.assign(states, 0);
      epoch_ = 0;
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  } else {
    sparse_.clear();
  }
}

bool StateSet::insert(Vertex v, ColorSet mask) {
  if (dense_) {
    auto& slot = stamp_[(static_cast<std::size_t>(v) << palette_) | static_cast<std::size_t>(mask)];
    if (slot == epoch_) return false;
    slot = epoch_;
    return true;
  }
  return sparse_.insert({v, mask}).second;
}

RainbowSearch::RainbowSearch(const Graph& g, std::span<const Color> colors) : g_(&g) { recolor(colors); }

RainbowSearch::RainbowSearch(const Graph& g, int palette)
    : g_(&g), palette_(palette), bit_(static_cast<std::size_t>(g.order()) + 1, 0) {}

void RainbowSearch::recolor(std::span<const Color> colors) {
  bit_.assign(static_cast<std::size_t>(g_->order()) + 1, 0);
  palette_ = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const Color c = colors[i];
    if (c > 0) bit_[i + 1] = ColorSet{1} << (c - 1);
    palette_ = std::max(palette_, c);
  }
}

bool RainbowSearch::connects(Vertex s, Vertex t) {
  if (g_->adjacent(s, t)) return true;
  visited_.reset(g_->order(), palette_);
  queue_.clear();
  for (Vertex w : g_->neighbors(s)) {
    if (usable(w) && visited_.insert(w, bit_[w])) queue_.push_back({w, bit_[w]});
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const State st = queue_[head];
    if (g_->adjacent(st.v, t)) return true;
    for (Vertex w : g_->neighbors(st.v)) {
      if (w == s || w == t || !usable(w) || (st.used & bit_[w]) != 0) continue;
      const ColorSet next = st.used | bit_[w];
      if (visited_.insert(w, next)) queue_.push_back({w, next});
    }
  }
  return false;
}

void RainbowSearch::reachable_from(Vertex s, std::vector<char>& reached) {
  reached.assign(static_cast<std::size_t>(g_->order()) + 1, 0);
  visited_.reset(g_->order(), palette_);
  queue_.clear();
  for (Vertex w : g_->neighbors(s)) {
    reached[w] = 1;
    if (usable(w) && visited_.insert(w, bit_[w])) queue_.push_back({w, bit_[w]});
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const State st = queue_[head];
    for (Vertex w : g_->neighbors(st.v)) {
      if (w == s) continue;
      reached[w] = 1;
      if (!usable(w) || (st.used & bit_[w]) != 0) continue;
      const ColorSet next = st.used | bit_[w];
      if (visited_.insert(w, next)) queue_.push_back({w, next});
    }
  }
  reached[s] = 0;
}

std::optional<Path> RainbowSearch::shortest_lex_path(Vertex s, Vertex t) {
  if (g_->adjacent(s, t)) return Path{{s, t}};

  // Layered BFS for the minimum number of edges.
  int best = -1;
  visited_.reset(g_->order(), palette_);
  std::vector<State> layer;
  for (Vertex w : g_->neighbors(s)) {
    if (usable(w) && visited_.insert(w, bit_[w])) layer.push_back({w, bit_[w]});
  }
  for (int edges = 2; !layer.empty() && best < 0; ++edges) {
    std::vector<State> next_layer;
    for (const State& st : layer) {
      if (g_->adjacent(st.v, t)) {
        best = edges;
        break;
      }
      for (Vertex w : g_->neighbors(st.v)) {
        if (w == s || w == t || !usable(w) || (st.used & bit_[w]) != 0) continue;
        const ColorSet next = st.used | bit_[w];
        if (visited_.insert(w, next)) next_layer.push_back({w, next});
      }
    }
    layer = std::move(next_layer);
  }
  if (best < 0) return std::nullopt;

  // Depth-limited DFS in ascending neighbor order yields the lexicographically
  // least path among those of minimum length.
  failed_.assign(static_cast<std::size_t>(g_->order()) + 1, {});
  std::vector<Vertex> trail{s};
  if (!extend_lex(s, 0, s, t, best, trail)) return std::nullopt;
  return Path{std::move(trail)};
}

bool RainbowSearch::extend_lex(Vertex v, ColorSet used, Vertex s, Vertex t, int remaining,
                               std::vector<Vertex>& trail) {
  if (remaining == 1) {
    if (!g_->adjacent(v, t)) return false;
    trail.push_back(t);
    return true;
  }
  for (Vertex w : g_->neighbors(v)) {
    if (w == s || w == t || !usable(w) || (used & bit_[w]) != 0) continue;
    const ColorSet next = used | bit_[w];
    auto& dead = failed_[w];
    const bool known_dead = std::any_of(dead.begin(), dead.end(), [&](const auto& d) {
      return d.first == next && d.second >= remaining - 1;
    });
    if (known_dead) continue;
    trail.push_back(w);
    if (extend_lex(w, next, s, t, remaining - 1, trail)) return true;
    trail.pop_back();
    dead.emplace_back(next, remaining - 1);
  }
  return false;
}

}  // namespace rvc::detail
