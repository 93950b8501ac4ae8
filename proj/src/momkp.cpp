#include "pareto_lens/momkp.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

// Both endpoints are clamped first; an empty interval collapses onto its upper end.
std::int64_t draw(Rng& rng, Interval iv) {
  if (iv.lo > iv.hi) return iv.hi;
  return rng.uniform_int(iv.lo, iv.hi);
}

Interval harmonious_next(std::int64_t prev) { return {std::max<std::int64_t>(prev - 100, 1), std::min<std::int64_t>(prev + 100, 1000)}; }

Interval conflicting_next(std::int64_t prev) {
  return {std::max<std::int64_t>(900 - prev, 1), std::min<std::int64_t>(1100 - prev, 1000)};
}

bool inside(std::int64_t v, Interval iv) { return v >= iv.lo && v <= iv.hi; }

void draw_item(SetKind kind, std::size_t m, std::size_t p, Rng& rng, std::int64_t* w, std::int64_t* c, int* branch) {
  switch (kind) {
    case SetKind::A:
      for (std::size_t k = 0; k < p; ++k) c[k] = rng.uniform_int(1, 1000);
      for (std::size_t j = 0; j < m; ++j) w[j] = rng.uniform_int(1, 1000);
      return;
    case SetKind::B:
      c[0] = rng.uniform_int(1, 1000);
      for (std::size_t k = 1; k < p; ++k) c[k] = draw(rng, harmonious_next(c[k - 1]));
      for (std::size_t j = 0; j < m; ++j) w[j] = rng.uniform_int(1, 1000);
      return;
    case SetKind::C:
      c[0] = rng.uniform_int(1, 1000);
      for (std::size_t k = 1; k < p; ++k) c[k] = draw(rng, conflicting_next(c[k - 1]));
      for (std::size_t j = 0; j < m; ++j) w[j] = rng.uniform_int(1, 1000);
      return;
    case SetKind::D:
      c[0] = rng.uniform_int(1, 1000);
      for (std::size_t k = 1; k < p; ++k) c[k] = draw(rng, conflicting_next(c[k - 1]));
      // Weight j pairs with the profit difference |c_j - c_{j-1}|; weight 1 wraps to |c_1 - c_4|.
      w[0] = draw(rng, conflicting_next(std::llabs(c[0] - c[3])));
      for (std::size_t j = 1; j < m; ++j) w[j] = draw(rng, conflicting_next(std::llabs(c[j] - c[j - 1])));
      return;
    case SetKind::X: {
      const double r = rng.uniform_real();
      int b = 5;
      if (r <= 0.1) {
        b = 1;
        c[0] = rng.uniform_int(900, 1000);
        c[1] = rng.uniform_int(c[0], 1000);
        c[2] = rng.uniform_int(0, 100);
        c[3] = rng.uniform_int(0, 100);
      } else if (r <= 0.2) {
        b = 2;
        c[2] = rng.uniform_int(900, 1000);
        c[3] = rng.uniform_int(c[2], 1000);
        c[0] = rng.uniform_int(0, 100);
        c[1] = rng.uniform_int(0, 100);
      } else if (r <= 0.3) {
        b = 3;
        c[0] = rng.uniform_int(900, 1000);
        c[2] = rng.uniform_int(c[0], 1000);
        c[1] = rng.uniform_int(0, 100);
        c[3] = rng.uniform_int(0, 100);
      } else if (r <= 0.4) {
        b = 4;
        c[1] = rng.uniform_int(900, 1000);
        c[2] = rng.uniform_int(900, 1000);
        c[0] = rng.uniform_int(0, 100);
        c[3] = rng.uniform_int(0, 100);
      } else {
        for (std::size_t k = 0; k < 4; ++k) c[k] = rng.uniform_int(0, 1000);
      }
      w[0] = c[0] + c[1] + c[2];
      w[1] = c[1] + c[2] + c[3];
      w[2] = c[0] + c[2] + c[3];
      w[3] = c[0] + c[1] + c[3];
      if (branch) *branch = b;
      return;
    }
    case SetKind::External:
      break;
  }
  throw ArgumentError("generate: external instances cannot be generated");
}

void check_x(const MomkpInstance& inst, std::size_t x_size) {
  if (x_size != inst.n) {
    throw ArgumentError("selection has " + std::to_string(x_size) + " bits, instance has " + std::to_string(inst.n) +
                        " items");
  }
}

}  // namespace

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::A: return "A";
    case SetKind::B: return "B";
    case SetKind::C: return "C";
    case SetKind::D: return "D";
    case SetKind::X: return "X";
    case SetKind::External: return "External";
  }
  return "External";
}

std::optional<SetKind> parse_set_kind(const std::string& text) {
  for (auto kind : {SetKind::A, SetKind::B, SetKind::C, SetKind::D, SetKind::X, SetKind::External}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

MomkpInstance generate(SetKind kind, std::size_t n, std::size_t m, std::size_t p, CapacityRule capacity,
                       std::uint64_t seed, GenerationTrace* trace) {
  if (n < 1 || m < 1 || p < 1) throw ArgumentError("generate: n, m and p must be positive");
  if (kind == SetKind::External) throw ArgumentError("generate: external instances cannot be generated");
  if (kind != SetKind::A && p != 4) throw ArgumentError("generate: set " + to_string(kind) + " requires p = 4");
  if ((kind == SetKind::D || kind == SetKind::X) && m != 4) {
    throw ArgumentError("generate: set " + to_string(kind) + " requires m = 4");
  }
  if (capacity.capacity_for(n) < 0) throw ArgumentError("generate: capacity must be non-negative");

  MomkpInstance inst;
  inst.n = n;
  inst.m = m;
  inst.p = p;
  inst.kind = kind;
  inst.seed = seed;
  inst.capacities.assign(m, capacity.capacity_for(n));
  inst.weights.resize(n * m);
  inst.profits.resize(n * p);
  if (trace) trace->x_branch.assign(kind == SetKind::X ? n : 0, 0);

  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    int* branch = (trace && kind == SetKind::X) ? &trace->x_branch[i] : nullptr;
    draw_item(kind, m, p, rng, &inst.weights[i * m], &inst.profits[i * p], branch);
  }
  return inst;
}

ObjectiveVector evaluate(const MomkpInstance& inst, std::span<const std::uint8_t> x) {
  check_x(inst, x.size());
  std::vector<std::int64_t> sums(inst.p, 0);
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i]) continue;
    for (std::size_t k = 0; k < inst.p; ++k) sums[k] += inst.profit(i, k);
  }
  return ObjectiveVector(sums.begin(), sums.end());
}

bool feasible(const MomkpInstance& inst, std::span<const std::uint8_t> x) {
  check_x(inst, x.size());
  for (std::size_t j = 0; j < inst.m; ++j) {
    std::int64_t load = 0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (x[i]) load += inst.weight(i, j);
    }
    if (load > inst.capacities[j]) return false;
  }
  return true;
}

Selection repair(const MomkpInstance& inst, Selection x, Rng& rng, std::span<const std::size_t> objective_mask) {
  check_x(inst, x.size());
  std::vector<std::int64_t> load(inst.m, 0);
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (!x[i]) continue;
    selected.push_back(i);
    for (std::size_t j = 0; j < inst.m; ++j) load[j] += inst.weight(i, j);
  }
  auto overloaded = [&] {
    for (std::size_t j = 0; j < inst.m; ++j) {
      if (load[j] > inst.capacities[j]) return true;
    }
    return false;
  };
  if (!overloaded()) return x;

  std::vector<double> ratio(inst.n, 0.0);
  for (std::size_t i : selected) {
    std::int64_t profit = 0, weight = 0;
    if (objective_mask.empty()) {
      for (std::size_t k = 0; k < inst.p; ++k) profit += inst.profit(i, k);
    } else {
      for (std::size_t k : objective_mask) profit += inst.profit(i, k);
    }
    for (std::size_t j = 0; j < inst.m; ++j) weight += inst.weight(i, j);
    ratio[i] = weight > 0 ? static_cast<double>(profit) / static_cast<double>(weight)
                          : std::numeric_limits<double>::infinity();
  }
  // Random order first so that the stable sort breaks ratio ties by rng.
  for (std::size_t k = selected.size(); k > 1; --k) std::swap(selected[k - 1], selected[rng.index(k)]);
  std::stable_sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) { return ratio[a] < ratio[b]; });

  for (std::size_t i : selected) {
    if (!overloaded()) break;
    x[i] = 0;
    for (std::size_t j = 0; j < inst.m; ++j) load[j] -= inst.weight(i, j);
  }
  return x;
}

void validate(const MomkpInstance& inst) {
  if (inst.n < 1 || inst.m < 1 || inst.p < 1) throw ArgumentError("instance: n, m, p must be positive");
  if (inst.capacities.size() != inst.m || inst.weights.size() != inst.n * inst.m ||
      inst.profits.size() != inst.n * inst.p) {
    throw ArgumentError("instance: array sizes disagree with n, m, p");
  }
  for (auto w : inst.capacities) {
    if (w < 0) throw ArgumentError("instance: negative capacity");
  }
  auto fail = [](std::size_t i, const std::string& what) {
    throw ArgumentError("instance item " + std::to_string(i + 1) + ": " + what);
  };
  const Interval unit{1, 1000};
  for (std::size_t i = 0; i < inst.n; ++i) {
    const std::int64_t* w = &inst.weights[i * inst.m];
    const std::int64_t* c = &inst.profits[i * inst.p];
    switch (inst.kind) {
      case SetKind::External:
        for (std::size_t j = 0; j < inst.m; ++j) {
          if (w[j] < 0) fail(i, "negative weight");
        }
        for (std::size_t k = 0; k < inst.p; ++k) {
          if (c[k] < 0) fail(i, "negative profit");
        }
        break;
      case SetKind::A:
        for (std::size_t k = 0; k < inst.p; ++k) {
          if (!inside(c[k], unit)) fail(i, "profit outside [1,1000]");
        }
        for (std::size_t j = 0; j < inst.m; ++j) {
          if (!inside(w[j], unit)) fail(i, "weight outside [1,1000]");
        }
        break;
      case SetKind::B:
      case SetKind::C:
      case SetKind::D:
        if (inst.p != 4) fail(i, "set requires p = 4");
        if (!inside(c[0], unit)) fail(i, "profit 1 outside [1,1000]");
        for (std::size_t k = 1; k < inst.p; ++k) {
          const auto iv = inst.kind == SetKind::B ? harmonious_next(c[k - 1]) : conflicting_next(c[k - 1]);
          if (!inside(c[k], iv)) fail(i, "profit " + std::to_string(k + 1) + " violates the set recipe");
        }
        if (inst.kind == SetKind::D) {
          if (inst.m != 4) fail(i, "set D requires m = 4");
          if (!inside(w[0], conflicting_next(std::llabs(c[0] - c[3])))) fail(i, "weight 1 violates the set D recipe");
          for (std::size_t j = 1; j < inst.m; ++j) {
            if (!inside(w[j], conflicting_next(std::llabs(c[j] - c[j - 1])))) {
              fail(i, "weight " + std::to_string(j + 1) + " violates the set D recipe");
            }
          }
        } else {
          for (std::size_t j = 0; j < inst.m; ++j) {
            if (!inside(w[j], unit)) fail(i, "weight outside [1,1000]");
          }
        }
        break;
      case SetKind::X:
        if (inst.p != 4 || inst.m != 4) fail(i, "set X requires m = p = 4");
        for (std::size_t k = 0; k < 4; ++k) {
          if (!inside(c[k], {0, 1000})) fail(i, "profit outside [0,1000]");
        }
        if (w[0] != c[0] + c[1] + c[2] || w[1] != c[1] + c[2] + c[3] || w[2] != c[0] + c[2] + c[3] ||
            w[3] != c[0] + c[1] + c[3]) {
          fail(i, "set X weights must equal the profit sums");
        }
        break;
    }
  }
}

std::string specs_label(const MomkpInstance& inst) {
  return "MOMKP n=" + std::to_string(inst.n) + " m=" + std::to_string(inst.m) + " p=" + std::to_string(inst.p) +
         " kind=" + to_string(inst.kind) + " seed=" + std::to_string(inst.seed);
}

void write_instance(std::ostream& out, const MomkpInstance& inst) {
  out << "MOMKP " << inst.n << ' ' << inst.m << ' ' << inst.p << ' ' << to_string(inst.kind) << ' ' << inst.seed
      << '\n';
  for (std::size_t j = 0; j < inst.m; ++j) out << (j ? " " : "") << inst.capacities[j];
  out << '\n';
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < inst.m; ++j) out << (j ? " " : "") << inst.weight(i, j);
    for (std::size_t k = 0; k < inst.p; ++k) out << ' ' << inst.profit(i, k);
    out << '\n';
  }
}

std::string instance_text(const MomkpInstance& inst) {
  std::ostringstream ss;
  write_instance(ss, inst);
  return ss.str();
}

MomkpInstance parse_instance(std::istream& in) {
  std::size_t line_no = 0;
  // Lines starting with '#' are comments; returned line numbers are physical.
  auto read_line = [&]() {
    std::string line;
    while (true) {
      if (!std::getline(in, line)) throw ParseError("unexpected end of file", line_no + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() != '#') return line;
    }
  };
  MomkpInstance inst;
  {
    std::istringstream header(read_line());
    std::string tag, kind;
    if (!(header >> tag >> inst.n >> inst.m >> inst.p >> kind >> inst.seed) || tag != "MOMKP") {
      throw ParseError("expected 'MOMKP n m p kind seed'", line_no);
    }
    const auto parsed = parse_set_kind(kind);
    if (!parsed) throw ParseError("unknown set kind '" + kind + "'", line_no);
    inst.kind = *parsed;
    if (inst.n < 1 || inst.m < 1 || inst.p < 1) throw ParseError("n, m and p must be positive", line_no);
  }
  auto read_ints = [&](std::size_t count, std::vector<std::int64_t>& dst) {
    std::istringstream ls(read_line());
    for (std::size_t k = 0; k < count; ++k) {
      std::int64_t v = 0;
      if (!(ls >> v)) throw ParseError("expected " + std::to_string(count) + " integers", line_no);
      dst.push_back(v);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing data '" + extra + "'", line_no);
  };
  read_ints(inst.m, inst.capacities);
  std::vector<std::int64_t> row;
  for (std::size_t i = 0; i < inst.n; ++i) {
    row.clear();
    read_ints(inst.m + inst.p, row);
    inst.weights.insert(inst.weights.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(inst.m));
    inst.profits.insert(inst.profits.end(), row.begin() + static_cast<std::ptrdiff_t>(inst.m), row.end());
  }
  try {
    validate(inst);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
  return inst;
}

MomkpInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

}  // namespace pareto_lens
