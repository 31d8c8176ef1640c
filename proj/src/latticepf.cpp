#include "vertexid/latticepf.hpp"

#include <array>
#include <optional>

#include "vertexid/matrix.hpp"

namespace vertexid {

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Square: return "square";
    case DomainKind::PartialSquare: return "partial-square";
    case DomainKind::UTurn: return "u-turn";
    case DomainKind::PartialUTurn: return "partial-u-turn";
    case DomainKind::OffDiagonal: return "off-diagonal";
    case DomainKind::OffDiagonalOdd: return "off-diagonal-odd";
  }
  return "unknown";
}

DomainKind parse_domain_kind(std::string_view text) {
  for (auto kind : {DomainKind::Square, DomainKind::PartialSquare, DomainKind::UTurn, DomainKind::PartialUTurn,
                    DomainKind::OffDiagonal, DomainKind::OffDiagonalOdd}) {
    if (to_string(kind) == text) return kind;
  }
  throw InvalidInput("unknown domain kind '" + std::string(text) + "'");
}

BoltzmannWeights BoltzmannWeights::at_ratio(const Rational& r, const Rational& t) {
  if (r == 1) throw DegenerateSample("spectral ratio equal to 1");
  const Rational d = 1 - r;
  return BoltzmannWeights{(1 - t * r) / d, 1, t, (1 - t) / d, (1 - t) * r / d};
}

const Rational& BoltzmannWeights::of(VertexType type) const {
  switch (type) {
    case VertexType::APlus:
    case VertexType::AMinus: return a;
    case VertexType::BPlus: return b_plus;
    case VertexType::BMinus: return b_minus;
    case VertexType::CPlus: return c_plus;
    case VertexType::CMinus: return c_minus;
  }
  return a;
}

namespace {

Rational nonzero(const Rational& value, const char* what) {
  if (value == 0) throw DegenerateSample(what);
  return value;
}

void require_sizes(std::span<const Rational> x, std::span<const Rational> y, bool equal) {
  if (equal ? x.size() != y.size() : x.size() > y.size()) {
    throw InvalidInput("rapidity counts do not fit the domain: " + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()));
  }
}

// (1-t)/((1-x y)(1-t x y))
Rational izergin_entry(const Rational& x, const Rational& y, const Rational& t) {
  return (1 - t) / nonzero((1 - x * y) * (1 - t * x * y), "Izergin entry has a pole");
}

Rational tsuchiya_entry(const Rational& x, const Rational& y, const Rational& t) {
  const Rational ybar = 1 / nonzero(y, "zero vertical rapidity");
  return izergin_entry(x, y, t) / nonzero((1 - x * ybar) * (1 - t * x * ybar), "Tsuchiya entry has a pole");
}

Rational y_pair_denominator(std::span<const Rational> y) {
  Rational d = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) d *= (y[i] - y[j]) * (1 - 1 / (y[i] * y[j]));
  }
  return nonzero(d, "degenerate vertical rapidities");
}

}  // namespace

Rational z_asm_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t) {
  require_sizes(x, y, true);
  return z_asm_partial_closed(x, y, t);
}

Rational z_asm_partial_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t) {
  require_sizes(x, y, false);
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  if (n == 0) return 1;
  Matrix<Rational> a(n, Rational(0));
  Rational numerator = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& yj = y[static_cast<std::size_t>(j)];
      if (i < m) {
        const Rational& xi = x[static_cast<std::size_t>(i)];
        a(i, j) = izergin_entry(xi, yj, t);
        numerator *= 1 - t * xi * yj;
      } else {
        a(i, j) = pow(yj, n - 1 - i);
      }
    }
  }
  Rational denominator = vandermonde(x) * vandermonde(y);
  for (const auto& xi : x) denominator *= pow(xi, n - m);
  return numerator / nonzero(denominator, "degenerate rapidities") * det(a);
}

Rational z_uasm_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t) {
  require_sizes(x, y, true);
  return z_uasm_partial_closed(x, y, t);
}

Rational z_uasm_partial_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t) {
  require_sizes(x, y, false);
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  if (n == 0) return 1;
  Matrix<Rational> u(n, Rational(0));
  Rational numerator = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& yj = y[static_cast<std::size_t>(j)];
      const Rational ybar = 1 / nonzero(yj, "zero vertical rapidity");
      if (i < m) {
        const Rational& xi = x[static_cast<std::size_t>(i)];
        u(i, j) = tsuchiya_entry(xi, yj, t);
        numerator *= (1 - t * xi * yj) * (1 - t * xi * ybar);
      } else {
        const int e = n - i;
        u(i, j) = (pow(yj, e) - pow(ybar, e)) / nonzero(yj - ybar, "vertical rapidity equal to +-1");
      }
    }
  }
  Rational denominator = y_pair_denominator(y);
  for (int i = 0; i < m; ++i) {
    const Rational& xi = x[static_cast<std::size_t>(i)];
    denominator *= pow(xi, n - m);
    for (int j = i + 1; j < m; ++j) {
      const Rational& xj = x[static_cast<std::size_t>(j)];
      denominator *= (xi - xj) * (1 - t * xi * xj);
    }
  }
  return numerator / nonzero(denominator, "degenerate rapidities") * det(u);
}

Rational z_osasm_closed(std::span<const Rational> x, const Rational& t) {
  const int n = static_cast<int>(x.size());
  if (n % 2 != 0) throw InvalidInput("off-diagonal partition function needs an even number of rapidities");
  Matrix<Rational> a(n, Rational(0));
  Rational prefactor = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational& xi = x[static_cast<std::size_t>(i)];
      const Rational& xj = x[static_cast<std::size_t>(j)];
      const Rational p = xi * xj;
      a(i, j) = (xi - xj) * (1 - t) / nonzero((1 - p) * (1 - t * p), "Kuperberg entry has a pole");
      a(j, i) = -a(i, j);
      prefactor *= (1 - t * p) / nonzero(xi - xj, "coincident rapidities");
    }
  }
  return prefactor * pfaffian(a);
}

Rational z_osasm_odd_closed(std::span<const Rational> x, const Rational& t) {
  const int odd = static_cast<int>(x.size());
  if (odd % 2 != 1) throw InvalidInput("odd off-diagonal partition function needs an odd number of rapidities");
  const int n = (odd + 1) / 2;
  Matrix<Rational> o(2 * n, Rational(0));
  Rational numerator = pow(1 - t, n - 1);
  Rational denominator = 1;
  for (int i = 0; i < odd; ++i) {
    const Rational& xi = x[static_cast<std::size_t>(i)];
    denominator *= xi;
    for (int j = i + 1; j < odd; ++j) {
      const Rational& xj = x[static_cast<std::size_t>(j)];
      const Rational p = xi * xj;
      o(i, j) = (xi - xj) / nonzero((1 - p) * (1 - t * p), "Pfaffian entry has a pole");
      o(j, i) = -o(i, j);
      numerator *= 1 - t * p;
      denominator *= xi - xj;
    }
    o(i, odd) = xi;
    o(odd, i) = -xi;
  }
  return numerator / nonzero(denominator, "degenerate rapidities") * pfaffian(o);
}

namespace {

constexpr std::uint64_t kStateGuard = 10'000'000;

struct Slot {
  int edge;
  bool in_if_positive;
};

enum class SiteKind { Bulk, UTurn, Corner };

struct Site {
  SiteKind kind;
  // Bulk slots in canonical order L, R, B, T; two slots otherwise.
  std::array<Slot, 4> slots{};
  BoltzmannWeights weights{};
  Rational boundary_weight = 1;
  int row = 0;
  int col = 0;
};

std::optional<VertexType> classify(unsigned in_mask) {
  switch (in_mask) {
    case 0b0101: return VertexType::APlus;
    case 0b1010: return VertexType::AMinus;
    case 0b1001: return VertexType::BPlus;
    case 0b0110: return VertexType::BMinus;
    case 0b0011: return VertexType::CPlus;
    case 0b1100: return VertexType::CMinus;
    default: return std::nullopt;
  }
}

class Lattice {
 public:
  int new_edge(int fixed = -1) {
    edges_.push_back(static_cast<signed char>(fixed));
    return static_cast<int>(edges_.size()) - 1;
  }

  void add_bulk(Slot l, Slot r, Slot b, Slot t, const BoltzmannWeights& w, int row, int col) {
    Site s{SiteKind::Bulk, {l, r, b, t}, w, 1, row, col};
    sites_.push_back(s);
  }

  void add_boundary(SiteKind kind, Slot first, Slot second, const Rational& weight) {
    Site s{kind, {first, second, Slot{}, Slot{}}, BoltzmannWeights{}, weight, -1, -1};
    sites_.push_back(s);
  }

  void set_row_widths(std::vector<int> widths) { widths_ = std::move(widths); }

  LatticeSum run(const std::function<void(const LatticeConfig&)>& visit) {
    visit_ = &visit;
    config_.rows.clear();
    for (int w : widths_) config_.rows.emplace_back(static_cast<std::size_t>(w), VertexType::APlus);
    sum_ = LatticeSum{};
    states_ = 0;
    descend(0, Rational(1));
    return sum_;
  }

 private:
  bool in(const Slot& s) const { return (edges_[static_cast<std::size_t>(s.edge)] == 1) == s.in_if_positive; }

  void descend(std::size_t index, const Rational& weight) {
    if (++states_ > kStateGuard) throw InvalidInput("lattice enumeration exceeds the state guard");
    if (index == sites_.size()) {
      ++sum_.count;
      sum_.weight_sum += weight;
      if (*visit_) {
        config_.weight = weight;
        (*visit_)(config_);
      }
      return;
    }
    const Site& site = sites_[index];
    const int arity = site.kind == SiteKind::Bulk ? 4 : 2;
    std::array<int, 4> open{};
    int open_count = 0;
    for (int k = 0; k < arity; ++k) {
      const int e = site.slots[static_cast<std::size_t>(k)].edge;
      if (edges_[static_cast<std::size_t>(e)] < 0) open[static_cast<std::size_t>(open_count++)] = e;
    }
    for (unsigned choice = 0; choice < (1U << static_cast<unsigned>(open_count)); ++choice) {
      for (int k = 0; k < open_count; ++k) {
        edges_[static_cast<std::size_t>(open[static_cast<std::size_t>(k)])] =
            static_cast<signed char>((choice >> static_cast<unsigned>(k)) & 1U);
      }
      unsigned mask = 0;
      for (int k = 0; k < arity; ++k) {
        if (in(site.slots[static_cast<std::size_t>(k)])) mask |= 1U << static_cast<unsigned>(k);
      }
      if (site.kind == SiteKind::Bulk) {
        if (const auto type = classify(mask)) {
          config_.rows[static_cast<std::size_t>(site.row)][static_cast<std::size_t>(site.col)] = *type;
          descend(index + 1, weight * site.weights.of(*type));
        }
      } else {
        const bool conserving = mask == 0b01 || mask == 0b10;
        if ((site.kind == SiteKind::UTurn) == conserving) descend(index + 1, weight * site.boundary_weight);
      }
    }
    for (int k = 0; k < open_count; ++k) edges_[static_cast<std::size_t>(open[static_cast<std::size_t>(k)])] = -1;
  }

  std::vector<signed char> edges_;
  std::vector<Site> sites_;
  std::vector<int> widths_;
  LatticeConfig config_;
  LatticeSum sum_;
  std::uint64_t states_ = 0;
  const std::function<void(const LatticeConfig&)>* visit_ = nullptr;
};

// Horizontal edges are positive when pointing right, vertical edges when
// pointing up; a slot is "in" when the arrow points towards its vertex.
Slot left_of(int e) { return {e, true}; }
Slot right_of(int e) { return {e, false}; }
Slot below(int e) { return {e, true}; }
Slot above(int e) { return {e, false}; }

// Domain wall lattice: rows x_1..x_m from the top, columns carrying
// 1/y_n, ..., 1/y_1 from the left.
void build_square(Lattice& lat, std::span<const Rational> x, std::span<const Rational> y, const Rational& t,
                  bool partial) {
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  std::vector<int> vertical(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) vertical[static_cast<std::size_t>(j)] = lat.new_edge(1);
  for (int i = 0; i < m; ++i) {
    int left = lat.new_edge(1);
    for (int j = 0; j < n; ++j) {
      const bool last_col = j == n - 1;
      const bool last_row = i == m - 1;
      const int right = last_col ? lat.new_edge(0) : lat.new_edge();
      const int bottom = last_row ? lat.new_edge(partial ? -1 : 0) : lat.new_edge();
      const auto w = BoltzmannWeights::at_ratio(x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(n - 1 - j)], t);
      lat.add_bulk(left_of(left), right_of(right), below(bottom), above(vertical[static_cast<std::size_t>(j)]), w, i, j);
      vertical[static_cast<std::size_t>(j)] = bottom;
      left = right;
    }
  }
  lat.set_row_widths(std::vector<int>(static_cast<std::size_t>(m), n));
}

// Reflecting lattice: double row d has a left-oriented line (rapidity
// 1/x_d) above a right-oriented line (x_d), joined by a U-turn on the right.
// Vertices on left-oriented lines are read after a quarter turn clockwise,
// so the actual left/top/right/bottom slots become canonical T/R/B/L and
// the spectral ratio becomes x_d / y_j.
void build_uturn(Lattice& lat, std::span<const Rational> x, std::span<const Rational> y, const Rational& t,
                 bool partial) {
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  std::vector<int> vertical(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) vertical[static_cast<std::size_t>(j)] = lat.new_edge(1);
  for (int d = 0; d < m; ++d) {
    const Rational& xd = x[static_cast<std::size_t>(d)];
    std::array<int, 2> row_end{};
    for (int half = 0; half < 2; ++half) {
      const bool reversed = half == 0;
      int left = lat.new_edge(1);
      for (int j = 0; j < n; ++j) {
        const Rational& yj = y[static_cast<std::size_t>(n - 1 - j)];
        const int right = lat.new_edge();
        const bool last = d == m - 1 && half == 1;
        const int bottom = last ? lat.new_edge(partial ? -1 : 0) : lat.new_edge();
        const int top = vertical[static_cast<std::size_t>(j)];
        const int row = 2 * d + half;
        if (reversed) {
          const auto w = BoltzmannWeights::at_ratio(xd / nonzero(yj, "zero vertical rapidity"), t);
          lat.add_bulk(below(bottom), above(top), right_of(right), left_of(left), w, row, j);
        } else {
          lat.add_bulk(left_of(left), right_of(right), below(bottom), above(top), BoltzmannWeights::at_ratio(xd * yj, t),
                       row, j);
        }
        vertical[static_cast<std::size_t>(j)] = bottom;
        left = right;
      }
      row_end[static_cast<std::size_t>(half)] = left;
    }
    const Rational k = 1 / nonzero(1 - xd * xd, "U-turn weight has a pole");
    lat.add_boundary(SiteKind::UTurn, left_of(row_end[0]), left_of(row_end[1]), k);
  }
  lat.set_row_widths(std::vector<int>(static_cast<std::size_t>(2 * m), n));
}

// Off-diagonal lattice with N lines: line i runs in at height h = N + 1 - i
// from the left, turns at the corner (h, h) and leaves upwards through
// column h. Vertex (c, h), c < h, carries the ratio x_{N+1-h} x_{N+1-c}.
// All left edges point in, except the one at height out_height (if any).
void build_off_diagonal(Lattice& lat, std::span<const Rational> x, const Rational& t, int out_height) {
  const int lines = static_cast<int>(x.size());
  // vertical[c] holds the open edge below the last processed vertex of column c.
  std::vector<int> vertical(static_cast<std::size_t>(lines) + 1);
  for (int c = 1; c <= lines; ++c) vertical[static_cast<std::size_t>(c)] = lat.new_edge(1);
  std::vector<int> widths;
  for (int h = lines; h >= 1; --h) {
    int left = lat.new_edge(h == out_height ? 0 : 1);
    const int row = lines - h;
    for (int c = 1; c < h; ++c) {
      const int right = lat.new_edge();
      const int bottom = lat.new_edge();
      const auto w = BoltzmannWeights::at_ratio(
          x[static_cast<std::size_t>(lines - h)] * x[static_cast<std::size_t>(lines - c)], t);
      lat.add_bulk(left_of(left), right_of(right), below(bottom), above(vertical[static_cast<std::size_t>(c)]), w, row,
                   c - 1);
      vertical[static_cast<std::size_t>(c)] = bottom;
      left = right;
    }
    lat.add_boundary(SiteKind::Corner, left_of(left), above(vertical[static_cast<std::size_t>(h)]), 1);
    widths.push_back(h - 1);
  }
  lat.set_row_widths(std::move(widths));
}

}  // namespace

LatticeSum enumerate_lattice(DomainKind kind, std::span<const Rational> x, std::span<const Rational> y,
                             const Rational& t, const std::function<void(const LatticeConfig&)>& visit) {
  Lattice lat;
  switch (kind) {
    case DomainKind::Square:
      require_sizes(x, y, true);
      build_square(lat, x, y, t, false);
      break;
    case DomainKind::PartialSquare:
      require_sizes(x, y, false);
      build_square(lat, x, y, t, true);
      break;
    case DomainKind::UTurn:
      require_sizes(x, y, true);
      build_uturn(lat, x, y, t, false);
      break;
    case DomainKind::PartialUTurn:
      require_sizes(x, y, false);
      build_uturn(lat, x, y, t, true);
      break;
    case DomainKind::OffDiagonal:
      if (x.size() % 2 != 0) throw InvalidInput("off-diagonal domain needs an even number of lines");
      build_off_diagonal(lat, x, t, 0);
      break;
    case DomainKind::OffDiagonalOdd: {
      if (x.size() % 2 != 1) throw InvalidInput("odd off-diagonal domain needs an odd number of lines");
      // Removing the column of a line with zero rapidity from the even
      // lattice leaves exactly one outward left edge, at any height.
      LatticeSum total;
      for (int h = 1; h <= static_cast<int>(x.size()); ++h) {
        Lattice part;
        build_off_diagonal(part, x, t, h);
        const auto s = part.run(visit);
        total.count += s.count;
        total.weight_sum += s.weight_sum;
      }
      return total;
    }
  }
  return lat.run(visit);
}

std::vector<std::vector<int>> asm_matrix(const LatticeConfig& config) {
  std::vector<std::vector<int>> out;
  for (const auto& row : config.rows) {
    std::vector<int> r;
    for (auto type : row) r.push_back(type == VertexType::CPlus ? 1 : type == VertexType::CMinus ? -1 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vertexid
