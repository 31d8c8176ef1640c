#include "vertexid/planepart.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace vertexid {

namespace {

using Chain = std::vector<Partition>;

// All sequences top = c_k > c_{k-1} > ... > c_0 = empty with length(c_i) <= i,
// returned bottom-up (c_1 .. c_k).
std::vector<Chain> chains_down(const Partition& top, int steps) {
  std::vector<Chain> out;
  if (top.length() > steps) return out;
  Chain current(static_cast<std::size_t>(steps));
  std::function<void(const Partition&, int)> rec = [&](const Partition& lam, int i) {
    current[static_cast<std::size_t>(i - 1)] = lam;
    if (i == 1) {
      out.push_back(current);
      return;
    }
    for (const auto& mu : strips_below(lam))
      if (mu.length() <= i - 1) rec(mu, i - 1);
  };
  if (steps == 0) {
    if (top.empty()) out.emplace_back();
    return out;
  }
  rec(top, steps);
  return out;
}

// Right half of a symplectic chain below mubar(n) = top. Returns pairs of
// (mu(1..n), mubar(0..n)).
void symplectic_right(const Partition& top, int n, const std::function<void(const Chain&, const Chain&)>& visit) {
  Chain mu(static_cast<std::size_t>(n));
  Chain mubar(static_cast<std::size_t>(n + 1));
  mubar[static_cast<std::size_t>(n)] = top;
  std::function<void(int)> rec = [&](int j) {
    // mubar(j) is set; choose mu(j) then mubar(j-1).
    if (j == 0) {
      visit(mu, mubar);
      return;
    }
    for (const auto& m : strips_below(mubar[static_cast<std::size_t>(j)])) {
      mu[static_cast<std::size_t>(j - 1)] = m;
      for (const auto& mb : strips_below(m)) {
        if (mb.length() > j - 1) continue;
        mubar[static_cast<std::size_t>(j - 1)] = mb;
        rec(j - 1);
      }
    }
  };
  if (top.length() <= n) rec(n);
}

int chain_delta(const Chain& chain, int i) {
  int prev = i == 0 ? 0 : chain[static_cast<std::size_t>(i - 1)].weight();
  return chain[static_cast<std::size_t>(i)].weight() - prev;
}

Monomial chain_monomial(const Chain& chain) {
  Monomial mono;
  for (int i = 0; i < static_cast<int>(chain.size()); ++i) mono.set(i, chain_delta(chain, i));
  return mono;
}

bool central_ok(const Partition& c, CentralCondition condition, int size) {
  switch (condition) {
    case CentralCondition::None:
      return true;
    case CentralCondition::EvenCentral:
      return std::ranges::all_of(c.parts(), [](int p) { return p % 2 == 0; });
    case CentralCondition::EvenColumnsCentral:
      for (int k = 0; k < size; k += 2)
        if (c.part(k) != c.part(k + 1)) return false;
      return true;
  }
  return true;
}

PlanePartition assemble(int rows, int cols, const Chain& left, const Chain& right) {
  // left: lambda(1..rows), right: mu(1..cols); lambda(rows) = mu(cols).
  PlanePartition pi(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    const auto& lam = left[static_cast<std::size_t>(i - 1)];
    for (int l = 0; l < lam.length(); ++l) pi.set(l + rows - i, l, lam.part(l));
  }
  for (int j = 1; j <= cols; ++j) {
    const auto& mu = right[static_cast<std::size_t>(j - 1)];
    for (int l = 0; l < mu.length(); ++l) pi.set(l, l + cols - j, mu.part(l));
  }
  return pi;
}

Rational one_minus_t_pow(const Rational& t, int e) { return Rational(1) - pow(t, e); }

}  // namespace

PlanePartition::PlanePartition(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidInput("plane partition: negative base size");
  entries_.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
}

PlanePartition::PlanePartition(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  rows_ = static_cast<int>(entries_.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(entries_[0].size());
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != cols_) throw InvalidInput("plane partition: ragged rows");
  check();
}

void PlanePartition::check() const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      int v = at(i, j);
      if (v < 0) throw InvalidInput("plane partition: negative entry");
      if ((i > 0 && at(i - 1, j) < v) || (j > 0 && at(i, j - 1) < v))
        throw InvalidInput("plane partition: entries must decrease along rows and columns");
    }
  }
}

int PlanePartition::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return 0;
  return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void PlanePartition::set(int i, int j, int value) {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw InvalidInput("plane partition: index outside the base");
  entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
}

int PlanePartition::volume() const {
  int v = 0;
  for (const auto& row : entries_)
    for (int e : row) v += e;
  return v;
}

bool PlanePartition::is_symmetric() const {
  int size = std::max(rows_, cols_);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Partition PlanePartition::slice(int k) const {
  std::vector<int> parts;
  for (int l = 0;; ++l) {
    int i = k >= 0 ? l : l - k;
    int j = k >= 0 ? l + k : l;
    if (i >= rows_ || j >= cols_) break;
    parts.push_back(at(i, j));
  }
  return Partition(std::move(parts));
}

PlanePartition PlanePartition::from_slices(int rows, int cols, std::span<const Partition> slices) {
  if (static_cast<int>(slices.size()) != std::max(0, rows + cols - 1))
    throw InvalidInput("plane partition: wrong number of slices");
  PlanePartition pi(rows, cols);
  for (int s = 0; s < static_cast<int>(slices.size()); ++s) {
    int k = s - (rows - 1);
    const auto& lam = slices[static_cast<std::size_t>(s)];
    for (int l = 0; l < lam.length(); ++l) {
      int i = k >= 0 ? l : l - k;
      int j = k >= 0 ? l + k : l;
      if (i >= rows || j >= cols) throw InvalidInput("plane partition: slice does not fit the base");
      pi.set(i, j, lam.part(l));
    }
  }
  pi.check();
  return pi;
}

std::string PlanePartition::to_text() const {
  std::ostringstream out;
  for (const auto& row : entries_) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

PlanePartition PlanePartition::from_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw InvalidInput("plane partition: bad entry '" + token + "'");
      }
      if (used != token.size()) throw InvalidInput("plane partition: bad entry '" + token + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return PlanePartition(std::move(rows));
}

std::string PlanePartition::to_json() const { return nlohmann::json(entries_).dump(); }

PlanePartition PlanePartition::from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    return PlanePartition(j.get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("plane partition: ") + e.what());
  }
}

PathStats path_stats(const PlanePartition& pi, std::optional<int> framing) {
  const int rows = pi.rows(), cols = pi.cols();
  auto idx = [cols](int i, int j) { return static_cast<std::size_t>(i * cols + j); };
  const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

  std::vector<int> comp(static_cast<std::size_t>(rows * cols), -1);
  int ncomp = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (pi.at(i, j) == 0 || comp[idx(i, j)] >= 0) continue;
      std::vector<std::pair<int, int>> stack{{i, j}};
      comp[idx(i, j)] = ncomp;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (const auto& d : dirs) {
          int a2 = a + d[0], b2 = b + d[1];
          if (a2 < 0 || b2 < 0 || a2 >= rows || b2 >= cols) continue;
          if (comp[idx(a2, b2)] >= 0 || pi.at(a2, b2) != pi.at(i, j)) continue;
          comp[idx(a2, b2)] = ncomp;
          stack.emplace_back(a2, b2);
        }
      }
      ++ncomp;
    }
  }

  std::vector<int> depth(static_cast<std::size_t>(rows * cols), 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (pi.at(i, j) == 0) continue;
      int d = 1;
      while (i + d < rows && j + d < cols && comp[idx(i + d, j + d)] == comp[idx(i, j)]) ++d;
      depth[idx(i, j)] = d;
    }
  }

  PathStats stats;
  const bool symmetric = pi.is_symmetric();
  int off_diagonal_paths_by_depth[64] = {};
  std::vector<char> seen(static_cast<std::size_t>(rows * cols), 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (pi.at(i, j) == 0 || seen[idx(i, j)]) continue;
      const int c = comp[idx(i, j)], d = depth[idx(i, j)];
      bool on_diagonal = false;
      std::vector<std::pair<int, int>> stack{{i, j}};
      seen[idx(i, j)] = 1;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        on_diagonal = on_diagonal || a == b;
        for (const auto& dd : dirs) {
          int a2 = a + dd[0], b2 = b + dd[1];
          if (a2 < 0 || b2 < 0 || a2 >= rows || b2 >= cols || seen[idx(a2, b2)]) continue;
          if (pi.at(a2, b2) == 0 || comp[idx(a2, b2)] != c || depth[idx(a2, b2)] != d) continue;
          seen[idx(a2, b2)] = 1;
          stack.emplace_back(a2, b2);
        }
      }
      ++stats.by_depth[d];
      if (symmetric) {
        if (on_diagonal)
          ++stats.diagonal[d];
        else
          ++off_diagonal_paths_by_depth[std::min(d, 63)];
      }
    }
  }
  if (symmetric) {
    for (int d = 1; d < 64; ++d)
      if (off_diagonal_paths_by_depth[d] > 0) stats.off_diagonal_pairs[d] = off_diagonal_paths_by_depth[d] / 2;
  }

  if (framing) {
    const int n = *framing;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (pi.at(i, j) > 0 && (i >= n || j >= n))
          throw InvalidInput("path_stats: framing smaller than the support");
    stats.by_depth_framed = stats.by_depth;
    if (symmetric) stats.diagonal_framed = stats.diagonal;
    for (int d = 1; d <= n; ++d) {
      // The zero cells with max(i, j) = n - d + 1 form one path iff the
      // corner of that hook is zero.
      if (pi.at(n - d, n - d) != 0) continue;
      ++stats.by_depth_framed[d];
      if (symmetric) ++stats.diagonal_framed[d];
    }
  }
  return stats;
}

Rational path_weight(const std::map<int, int>& counts, const Rational& t, bool odd_depths_only) {
  Rational w = 1;
  for (const auto& [d, c] : counts) {
    if (odd_depths_only && d % 2 == 0) continue;
    w *= pow(one_minus_t_pow(t, d), c);
  }
  return w;
}

std::vector<PlanePartition> enumerate_pp(int m, int n, int max_volume) {
  if (m < 0 || n < 0) throw InvalidInput("enumerate_pp: negative base size");
  std::vector<PlanePartition> out;
  PlanePartition pi(m, n);
  std::function<void(int, int)> rec = [&](int cell, int budget) {
    if (cell == m * n) {
      out.push_back(pi);
      return;
    }
    int i = cell / n, j = cell % n;
    int bound = budget;
    if (i > 0) bound = std::min(bound, pi.at(i - 1, j));
    if (j > 0) bound = std::min(bound, pi.at(i, j - 1));
    for (int v = 0; v <= bound; ++v) {
      pi.set(i, j, v);
      rec(cell + 1, budget - v);
    }
    pi.set(i, j, 0);
  };
  if (max_volume >= 0) rec(0, max_volume);
  return out;
}

std::vector<PlanePartition> enumerate_pp_by_central(int m, int n, int max_central) {
  if (m < 0 || n < 0) throw InvalidInput("enumerate_pp_by_central: negative base size");
  std::vector<PlanePartition> out;
  for (const auto& c : enumerate_partitions(max_central, std::min(m, n))) {
    auto lefts = chains_down(c, m);
    auto rights = chains_down(c, n);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(assemble(m, n, l, r));
  }
  return out;
}

std::vector<PlanePartition> enumerate_symmetric_pp(int size, int max_volume, CentralCondition condition) {
  if (size < 0) throw InvalidInput("enumerate_symmetric_pp: negative size");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) cells.emplace_back(i, j);
  std::vector<PlanePartition> out;
  PlanePartition pi(size, size);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
    if (k == cells.size()) {
      std::vector<int> diag;
      for (int i = 0; i < size; ++i) diag.push_back(pi.at(i, i));
      if (central_ok(Partition(diag), condition, size)) out.push_back(pi);
      return;
    }
    auto [i, j] = cells[k];
    int cost = i == j ? 1 : 2;
    int bound = budget / cost;
    if (i > 0) bound = std::min(bound, pi.at(i - 1, j));
    if (j > 0) bound = std::min(bound, pi.at(i, j - 1));
    for (int v = 0; v <= bound; ++v) {
      pi.set(i, j, v);
      pi.set(j, i, v);
      rec(k + 1, budget - cost * v);
    }
    pi.set(i, j, 0);
    pi.set(j, i, 0);
  };
  if (max_volume >= 0) rec(0, max_volume);
  return out;
}

std::vector<PlanePartition> enumerate_symmetric_pp_by_central(int size, int max_central, CentralCondition condition) {
  if (size < 0) throw InvalidInput("enumerate_symmetric_pp_by_central: negative size");
  std::vector<PlanePartition> out;
  for (const auto& c : enumerate_partitions(max_central, size)) {
    if (!central_ok(c, condition, size)) continue;
    for (const auto& half : chains_down(c, size)) out.push_back(assemble(size, size, half, half));
  }
  return out;
}

std::vector<Partition> SymplecticPP::chain() const {
  std::vector<Partition> out{Partition()};
  out.insert(out.end(), lambda.begin(), lambda.end());
  for (int j = static_cast<int>(mu.size()); j >= 1; --j) {
    out.push_back(mu[static_cast<std::size_t>(j - 1)]);
    out.push_back(mubar[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

std::vector<SymplecticPP> enumerate_symplectic_pp(int m, int n, int max_central_weight) {
  if (m < 0 || m > n) throw InvalidInput("enumerate_symplectic_pp: requires 0 <= m <= n");
  std::vector<SymplecticPP> out;
  for (const auto& c : enumerate_partitions(max_central_weight, m)) {
    auto lefts = chains_down(c, m);
    symplectic_right(c, n, [&](const Chain& mu, const Chain& mubar) {
      for (const auto& l : lefts) out.push_back(SymplecticPP{l, mu, mubar});
    });
  }
  return out;
}

namespace {

enum class Family { Cauchy, Littlewood, Volume, Symplectic, SymplecticVolume };

struct GsEntry {
  const char* id;
  Family family;
  CentralCondition condition;
};

constexpr GsEntry kGsEntries[] = {
    {"s-pp-gs", Family::Cauchy, CentralCondition::None},
    {"hl-pp-gs", Family::Cauchy, CentralCondition::None},
    {"pp-asm-gs", Family::Cauchy, CentralCondition::None},
    {"s-refined-pp-gs", Family::Cauchy, CentralCondition::None},
    {"symp-cauch-pp", Family::Symplectic, CentralCondition::None},
    {"symp-pp-uasm", Family::Symplectic, CentralCondition::None},
    {"symp-pp-vol", Family::SymplecticVolume, CentralCondition::None},
    {"s-little1-pp-gs", Family::Littlewood, CentralCondition::None},
    {"s-little2-pp-gs", Family::Littlewood, CentralCondition::EvenCentral},
    {"s-little3-pp-gs", Family::Littlewood, CentralCondition::EvenColumnsCentral},
    {"hl-little1-pp-gs", Family::Littlewood, CentralCondition::None},
    {"hl-little2-pp-gs", Family::Littlewood, CentralCondition::EvenCentral},
    {"hl-little3-pp-gs", Family::Littlewood, CentralCondition::EvenColumnsCentral},
    {"sym-pp-osasm", Family::Littlewood, CentralCondition::EvenColumnsCentral},
    {"s-refined-little-pp-gs", Family::Littlewood, CentralCondition::EvenColumnsCentral},
    {"vol-pp", Family::Volume, CentralCondition::None},
    {"macmahon", Family::Volume, CentralCondition::None},
    {"vuletic-gs", Family::Volume, CentralCondition::None},
};

// prod_{i} (1 - t^{c_i - i + n}) over 0-based i < n, with c_i the central parts.
Rational central_refinement(const PlanePartition& pi, int n, const Rational& t) {
  Rational w = 1;
  for (int i = 0; i < n; ++i) w *= one_minus_t_pow(t, pi.at(i, i) - i + n);
  return w;
}

Rational cauchy_weight(std::string_view id, const PlanePartition& pi, int n, const Rational& t) {
  if (id == "s-pp-gs") return 1;
  if (id == "hl-pp-gs") return path_weight(path_stats(pi).by_depth, t);
  if (id == "pp-asm-gs") return path_weight(path_stats(pi, n).by_depth_framed, t);
  return central_refinement(pi, n, t);
}

Rational littlewood_weight(std::string_view id, const PlanePartition& pi, int size, const Rational& t) {
  if (id.starts_with("s-little")) return 1;
  if (id == "hl-little1-pp-gs" || id == "hl-little2-pp-gs") return path_weight(path_stats(pi).off_diagonal_pairs, t);
  if (id == "hl-little3-pp-gs") {
    auto s = path_stats(pi);
    return path_weight(s.off_diagonal_pairs, t) * path_weight(s.diagonal, t, true);
  }
  if (id == "sym-pp-osasm") {
    auto s = path_stats(pi, size);
    return path_weight(s.off_diagonal_pairs, t) * path_weight(s.diagonal_framed, t, true);
  }
  // s-refined-little-pp-gs: prod over even 1-based i of (1 - t^{pi(i,i) - i + size + 1}).
  Rational w = 1;
  for (int i = 1; i < size; i += 2) w *= one_minus_t_pow(t, pi.at(i, i) - i + size);
  return w;
}

TruncSeries cauchy_lhs(std::string_view id, const GsParams& p) {
  if (static_cast<int>(p.y.size()) != p.n) throw InvalidInput("gs_lhs: need n values of y");
  if ((id == "pp-asm-gs" || id == "s-refined-pp-gs") && p.m != p.n) throw InvalidInput("gs_lhs: requires m = n");
  TruncSeries out(p.m, p.cutoff);
  for (const auto& c : enumerate_partitions(p.cutoff, std::min(p.m, p.n))) {
    auto lefts = chains_down(c, p.m);
    auto rights = chains_down(c, p.n);
    for (const auto& r : rights) {
      Rational yv = 1;
      for (int j = 0; j < p.n; ++j) yv *= pow(p.y[static_cast<std::size_t>(j)], chain_delta(r, j));
      for (const auto& l : lefts) {
        auto pi = assemble(p.m, p.n, l, r);
        Rational w = cauchy_weight(id, pi, p.n, p.t);
        if (w != 0) out.add_term(chain_monomial(l), w * yv);
      }
    }
  }
  return out;
}

TruncSeries littlewood_lhs(std::string_view id, CentralCondition condition, const GsParams& p) {
  const int size = p.n;
  TruncSeries out(size, p.cutoff);
  for (const auto& c : enumerate_partitions(p.cutoff, size)) {
    if (!central_ok(c, condition, size)) continue;
    for (const auto& half : chains_down(c, size)) {
      auto pi = assemble(size, size, half, half);
      Rational w = littlewood_weight(id, pi, size, p.t);
      if (w != 0) out.add_term(chain_monomial(half), w);
    }
  }
  return out;
}

TruncSeries volume_lhs(std::string_view id, const GsParams& p) {
  int m = p.m, n = p.n;
  if (id == "macmahon" || id == "vuletic-gs") m = n = p.cutoff;
  TruncSeries out(1, p.cutoff);
  for (const auto& pi : enumerate_pp(m, n, p.cutoff)) {
    Rational w = id == "vuletic-gs" ? path_weight(path_stats(pi).by_depth, p.t) : Rational(1);
    Monomial mono;
    mono.set(0, pi.volume());
    if (w != 0) out.add_term(mono, w);
  }
  return out;
}

// y-exponent contribution of the right half: sum_j y_j^{2|mu(j)| - |mubar(j)| - |mubar(j-1)|}.
std::vector<int> symplectic_y_exponents(const Chain& mu, const Chain& mubar) {
  std::vector<int> e(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) e[j] = 2 * mu[j].weight() - mubar[j + 1].weight() - mubar[j].weight();
  return e;
}

TruncSeries symplectic_lhs(std::string_view id, const GsParams& p) {
  if (p.m > p.n) throw InvalidInput("gs_lhs: symplectic series require m <= n");
  if (static_cast<int>(p.y.size()) != p.n) throw InvalidInput("gs_lhs: need n values of y");
  if (id == "symp-pp-uasm" && p.m != p.n) throw InvalidInput("gs_lhs: symp-pp-uasm requires m = n");
  TruncSeries out(p.m, p.cutoff);
  for (const auto& c : enumerate_partitions(p.cutoff, p.m)) {
    Rational right = 0;
    symplectic_right(c, p.n, [&](const Chain& mu, const Chain& mubar) {
      Rational v = 1;
      auto e = symplectic_y_exponents(mu, mubar);
      for (int j = 0; j < p.n; ++j) v *= pow(p.y[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
      right += v;
    });
    Rational w = right;
    if (id == "symp-pp-uasm")
      for (int i = 0; i < p.n; ++i) w *= one_minus_t_pow(p.t, c.part(i) - i + p.n);
    if (w == 0) continue;
    for (const auto& l : chains_down(c, p.m)) out.add_term(chain_monomial(l), w);
  }
  return out;
}

// Series in s = q^{1/2}: x_i = s^{2(m-i)+3} (1-based i), y_j = s.
TruncSeries symplectic_volume_lhs(const GsParams& p) {
  if (p.m > p.n) throw InvalidInput("gs_lhs: symplectic series require m <= n");
  TruncSeries out(1, p.cutoff);
  // Every chain with central weight w has s-degree >= 2w.
  for (const auto& c : enumerate_partitions(p.max_central.value_or(p.cutoff / 2), p.m)) {
    std::map<int, Rational> right;
    symplectic_right(c, p.n, [&](const Chain& mu, const Chain& mubar) {
      int e = 0;
      for (int v : symplectic_y_exponents(mu, mubar)) e += v;
      right[e] += 1;
    });
    for (const auto& l : chains_down(c, p.m)) {
      int e = 0;
      for (int i = 0; i < p.m; ++i) e += (2 * (p.m - 1 - i) + 3) * chain_delta(l, i);
      for (const auto& [er, count] : right) {
        if (e + er > p.cutoff) continue;
        Monomial mono;
        mono.set(0, e + er);
        out.add_term(mono, count);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> gs_ids() {
  std::vector<std::string> ids;
  for (const auto& e : kGsEntries) ids.emplace_back(e.id);
  return ids;
}

TruncSeries gs_lhs(std::string_view id, const GsParams& params) {
  const auto* entry = std::ranges::find_if(kGsEntries, [&](const GsEntry& e) { return id == e.id; });
  if (entry == std::end(kGsEntries)) throw InvalidInput("gs_lhs: unknown series id '" + std::string(id) + "'");
  if (params.m < 0 || params.n < 0 || params.cutoff < 0) throw InvalidInput("gs_lhs: negative parameter");
  switch (entry->family) {
    case Family::Cauchy:
      return cauchy_lhs(id, params);
    case Family::Littlewood:
      return littlewood_lhs(id, entry->condition, params);
    case Family::Volume:
      return volume_lhs(id, params);
    case Family::Symplectic:
      return symplectic_lhs(id, params);
    case Family::SymplecticVolume:
      return symplectic_volume_lhs(params);
  }
  return TruncSeries(1, params.cutoff);
}

}  // namespace vertexid
