#include "pruned/betti.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace pruned {

namespace {

void check_char(std::int64_t p) {
  if (p == 0) return;
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw InvalidInputError("characteristic out of range");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInputError("characteristic must be 0 or a prime");
}

}  // namespace

std::size_t BettiTable::total(int i) const {
  auto it = entries.find(i);
  if (it == entries.end()) return 0;
  std::size_t s = 0;
  for (const auto& [alpha, r] : it->second) s += r;
  return s;
}

std::size_t BettiTable::at(int i, const Monomial& alpha) const {
  auto it = entries.find(i);
  if (it == entries.end()) return 0;
  auto jt = it->second.find(alpha);
  return jt == it->second.end() ? 0 : jt->second;
}

void BettiTable::add(int i, const Monomial& alpha, std::size_t count) {
  if (count) entries[i][alpha] += count;
}

void BettiTable::drop_zeros() {
  for (auto it = entries.begin(); it != entries.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? entries.erase(it) : std::next(it);
  }
}

BettiTable BettiTable::plus(const BettiTable& other) const {
  if (characteristic != other.characteristic)
    throw InvalidInputError("Betti tables over different characteristics");
  BettiTable out = *this;
  for (const auto& [i, row] : other.entries)
    for (const auto& [alpha, r] : row) out.entries[i][alpha] += r;
  return out;
}

BettiTable BettiTable::shifted(int k) const {
  BettiTable out;
  out.characteristic = characteristic;
  for (const auto& [i, row] : entries) out.entries[i + k] = row;
  return out;
}

BettiTable BettiTable::rescaled(const Monomial& m) const {
  BettiTable out;
  out.characteristic = characteristic;
  for (const auto& [i, row] : entries)
    for (const auto& [alpha, r] : row) out.entries[i][alpha.times(m)] += r;
  return out;
}

std::map<int, std::map<std::int64_t, std::size_t>> BettiTable::z_graded() const {
  std::map<int, std::map<std::int64_t, std::size_t>> out;
  for (const auto& [i, row] : entries)
    for (const auto& [alpha, r] : row) out[i][alpha.degree()] += r;
  return out;
}

std::string BettiTable::to_json() const {
  nlohmann::json j;
  j["characteristic"] = characteristic;
  j["entries"] = nlohmann::json::array();
  for (const auto& [i, row] : entries)
    for (const auto& [alpha, r] : row)
      j["entries"].push_back({{"i", i}, {"degree", alpha.exponents()}, {"rank", r}});
  return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    BettiTable t;
    t.characteristic = j.at("characteristic").get<std::int64_t>();
    for (const auto& e : j.at("entries"))
      t.entries[e.at("i").get<int>()][Monomial(e.at("degree").get<std::vector<std::int64_t>>())] +=
          e.at("rank").get<std::size_t>();
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInputError(std::string("betti table json: ") + ex.what());
  }
}

std::string render_diagram(const BettiTable& t) {
  auto z = t.z_graded();
  if (z.empty()) return "(zero table)\n";
  int imin = z.begin()->first, imax = z.rbegin()->first;
  std::int64_t rmin = 0, rmax = 0;
  bool first = true;
  for (const auto& [i, row] : z)
    for (const auto& [d, r] : row) {
      (void)r;
      std::int64_t reg = d - i;
      if (first || reg < rmin) rmin = reg;
      if (first || reg > rmax) rmax = reg;
      first = false;
    }
  auto cell = [&](int i, std::int64_t reg) -> std::size_t {
    auto it = z.find(i);
    if (it == z.end()) return 0;
    auto jt = it->second.find(reg + i);
    return jt == it->second.end() ? 0 : jt->second;
  };

  std::vector<std::size_t> width(static_cast<std::size_t>(imax - imin + 1), 1);
  for (int i = imin; i <= imax; ++i) {
    std::size_t w = std::to_string(i).size();
    std::size_t tot = t.total(i);
    w = std::max(w, std::to_string(tot).size());
    for (std::int64_t reg = rmin; reg <= rmax; ++reg)
      w = std::max(w, std::to_string(cell(i, reg)).size());
    width[static_cast<std::size_t>(i - imin)] = w;
  }
  std::size_t label_w = std::max<std::size_t>(std::to_string(rmax).size(),
                                              std::max(std::to_string(rmin).size(), std::size_t{5}));
  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label_w + 1);
  for (int i = imin; i <= imax; ++i) {
    out << "  ";
    pad(std::to_string(i), width[static_cast<std::size_t>(i - imin)]);
  }
  out << '\n';
  pad("total", label_w);
  out << ':';
  for (int i = imin; i <= imax; ++i) {
    out << "  ";
    pad(std::to_string(t.total(i)), width[static_cast<std::size_t>(i - imin)]);
  }
  out << '\n';
  for (std::int64_t reg = rmin; reg <= rmax; ++reg) {
    pad(std::to_string(reg), label_w);
    out << ':';
    for (int i = imin; i <= imax; ++i) {
      out << "  ";
      std::size_t v = cell(i, reg);
      pad(v ? std::to_string(v) : ".", width[static_cast<std::size_t>(i - imin)]);
    }
    out << '\n';
  }
  return out.str();
}

std::size_t matrix_rank(std::vector<std::vector<Coeff>> m, std::int64_t p) {
  check_char(p);
  if (m.empty() || m.front().empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size();
  if (p > 0) {
    for (auto& row : m)
      for (auto& x : row) {
        x %= p;
        if (x < 0) x += p;
      }
  }
  std::size_t r = 0;
  Coeff prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    if (p > 0) {
      // modular elimination
      Coeff inv = 1, base = m[r][c], e = p - 2;
      while (e) {  // Fermat inverse
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Coeff f = m[i][c] * inv % p;
        for (std::size_t j = c; j < cols; ++j) {
          m[i][j] = (m[i][j] - f * m[r][j]) % p;
          if (m[i][j] < 0) m[i][j] += p;
        }
      }
    } else {
      // Bareiss fraction-free step: divisions are exact
      for (std::size_t i = r + 1; i < rows; ++i) {
        for (std::size_t j = c + 1; j < cols; ++j)
          m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
        m[i][c] = 0;
      }
      prev = m[r][c];
    }
    ++r;
  }
  return r;
}

std::map<int, std::size_t> reduced_homology(const std::vector<Cell>& faces, std::int64_t p) {
  check_char(p);
  std::map<int, std::size_t> out;
  if (faces.empty()) return out;  // void complex

  std::map<int, std::vector<Cell>> by_dim;  // simplicial dimension = |c| - 1
  for (Cell c : faces) by_dim[cell_size(c) - 1].push_back(c);
  if (by_dim.find(-1) == by_dim.end()) throw InvalidInputError("reduced_homology: empty face missing");

  std::map<int, std::unordered_map<Cell, std::size_t>> index;
  for (auto& [d, cells] : by_dim) {
    std::sort(cells.begin(), cells.end());
    for (std::size_t k = 0; k < cells.size(); ++k) index[d][cells[k]] = k;
  }

  // rank of the boundary map from dimension d to d-1
  std::map<int, std::size_t> drank;
  for (const auto& [d, cells] : by_dim) {
    if (d == -1) continue;
    auto rows_it = by_dim.find(d - 1);
    if (rows_it == by_dim.end()) continue;
    std::vector<std::vector<Coeff>> mat(rows_it->second.size(),
                                        std::vector<Coeff>(cells.size(), Coeff(0)));
    const auto& row_index = index[d - 1];
    for (std::size_t col = 0; col < cells.size(); ++col)
      for (const auto& [f, sign] : boundary(cells[col])) {
        auto it = row_index.find(f);
        if (it != row_index.end()) mat[it->second][col] = sign;
      }
    drank[d] = matrix_rank(std::move(mat), p);
  }

  for (const auto& [d, cells] : by_dim) {
    std::size_t dim = cells.size();
    std::size_t below = drank.count(d) ? drank[d] : 0;
    std::size_t above = drank.count(d + 1) ? drank[d + 1] : 0;
    std::size_t h = dim - below - above;
    if (h) out[d] = h;
  }
  return out;
}

namespace {

// Homology ranks (by chain degree = cell size) of one exact-multidegree
// strand of the Taylor complex.
std::map<int, std::size_t> strand_homology(const std::vector<Cell>& strand, std::int64_t p) {
  std::map<int, std::vector<Cell>> by_size;
  for (Cell c : strand) by_size[cell_size(c)].push_back(c);
  std::map<int, std::unordered_map<Cell, std::size_t>> index;
  for (auto& [s, cells] : by_size) {
    std::sort(cells.begin(), cells.end());
    for (std::size_t k = 0; k < cells.size(); ++k) index[s][cells[k]] = k;
  }
  std::map<int, std::size_t> drank;
  for (const auto& [s, cells] : by_size) {
    auto rows_it = by_size.find(s - 1);
    if (rows_it == by_size.end()) continue;
    std::vector<std::vector<Coeff>> mat(rows_it->second.size(),
                                        std::vector<Coeff>(cells.size(), Coeff(0)));
    const auto& row_index = index[s - 1];
    for (std::size_t col = 0; col < cells.size(); ++col)
      for (const auto& [f, sign] : boundary(cells[col])) {
        auto it = row_index.find(f);
        if (it != row_index.end()) mat[it->second][col] = sign;  // same-degree facets only
      }
    drank[s] = matrix_rank(std::move(mat), p);
  }
  std::map<int, std::size_t> out;
  for (const auto& [s, cells] : by_size) {
    std::size_t below = drank.count(s) ? drank[s] : 0;
    std::size_t above = drank.count(s + 1) ? drank[s + 1] : 0;
    std::size_t h = cells.size() - below - above;
    if (h) out[s] = h;
  }
  return out;
}

// Nerve of the cover of the strictly-lower-degree subcomplex at alpha by the
// simplices {generators small in variable v}.  Its reduced homology gives
// the Betti numbers at alpha without touching the strand itself.
std::map<int, std::size_t> nerve_homology(const MonomialIdeal& ideal, const Monomial& alpha,
                                          std::int64_t p) {
  std::vector<int> g_alpha;
  for (int j = 0; j < ideal.num_generators(); ++j)
    if (ideal.generator(j).divides(alpha)) g_alpha.push_back(j);

  std::vector<std::uint64_t> covers;  // A_v as masks over g_alpha
  for (int v = 1; v <= alpha.ambient(); ++v) {
    if (alpha.exponent(v) == 0) continue;
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < g_alpha.size(); ++k)
      if (ideal.generator(g_alpha[k]).exponent(v) < alpha.exponent(v)) mask |= std::uint64_t{1} << k;
    if (mask) covers.push_back(mask);
  }
  if (covers.size() > 30) throw CapacityError("nerve: too many cover sets");

  std::vector<Cell> faces{0};
  for (Cell t = 1; t < (Cell{1} << covers.size()); ++t) {
    std::uint64_t common = ~std::uint64_t{0};
    for (Cell rest = t; rest; rest &= rest - 1) common &= covers[static_cast<std::size_t>(__builtin_ctzll(rest))];
    if (common) faces.push_back(t);
  }
  return reduced_homology(faces, p);
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, std::int64_t p, const Caps& caps) {
  check_char(p);
  BettiTable table;
  table.characteristic = p;
  if (ideal.is_zero()) return table;
  ideal.require_proper("betti_numbers");
  int q = ideal.num_generators();
  if (q > caps.oracle_q)
    throw CapacityError("betti oracle: q=" + std::to_string(q) + " exceeds cap " +
                        std::to_string(caps.oracle_q) + " (raise PRUNED_CAP_ORACLE)");

  // group cells of the full Taylor complex by exact multidegree
  int n = ideal.ambient();
  std::map<Monomial, std::vector<Cell>> strands;
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n));
  for (Cell c = 1; c < (Cell{1} << q); ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Cell rest = c; rest; rest &= rest - 1) {
      const auto& e = ideal.generator(__builtin_ctzll(rest)).exponents();
      for (std::size_t v = 0; v < e.size(); ++v) acc[v] = std::max(acc[v], e[v]);
    }
    strands[Monomial(acc)].push_back(c);
  }

  for (const auto& [alpha, cells] : strands) {
    if (cells.size() <= caps.strand_dense) {
      for (const auto& [s, h] : strand_homology(cells, p))
        if (s >= 1) table.add(s - 1, alpha, h);
    } else {
      for (const auto& [d, h] : nerve_homology(ideal, alpha, p))
        table.add(d + 1, alpha, h);  // module index i has beta = H~_{i-1}(X_{<alpha})
    }
  }
  table.drop_zeros();
  return table;
}

BettiTable table_from_critical(const CriticalCells& crit, std::int64_t p) {
  check_char(p);
  BettiTable t;
  t.characteristic = p;
  for (const auto& [size, cells] : crit) {
    if (size == 0) continue;
    for (const auto& gc : cells) t.entries[size - 1][gc.degree] += 1;
  }
  return t;
}

}  // namespace pruned
