#include "pruned/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace pruned {

std::vector<Facet> boundary(Cell c) {
  std::vector<Facet> out;
  int k = 0;
  for (Cell rest = c; rest; rest &= rest - 1) {
    Cell bit = rest & (~rest + 1);
    out.push_back({c & ~bit, (k % 2 == 0) ? 1 : -1});
    ++k;
  }
  return out;
}

int facet_sign(Cell c, int v) {
  Cell below = c & ((Cell{1} << v) - 1);
  return (cell_size(below) % 2 == 0) ? 1 : -1;
}

Caps caps_from_env() {
  Caps caps;
  if (const char* s = std::getenv("PRUNED_CAP_TAYLOR")) caps.taylor_q = std::atoi(s);
  if (const char* s = std::getenv("PRUNED_CAP_FACES")) caps.faces = static_cast<std::size_t>(std::atoll(s));
  if (const char* s = std::getenv("PRUNED_CAP_ORACLE")) caps.oracle_q = std::atoi(s);
  return caps;
}

CellComplex::CellComplex(MonomialIdeal verts, std::optional<std::vector<Cell>> faces)
    : verts_(std::move(verts)), faces_(std::move(faces)) {
  if (verts_.num_generators() > 64) throw CapacityError("complex: more than 64 vertices");
  if (faces_) {
    std::sort(faces_->begin(), faces_->end());
    faces_->erase(std::unique(faces_->begin(), faces_->end()), faces_->end());
    face_set_.insert(faces_->begin(), faces_->end());
    if (face_set_.find(0) == face_set_.end())
      throw InvalidInputError("subcomplex: empty cell missing");
  }
  build_divtables();
}

CellComplex CellComplex::taylor(const MonomialIdeal& ideal, const Caps& caps) {
  int q = ideal.num_generators();
  if (q > caps.taylor_q)
    throw CapacityError("taylor complex: q=" + std::to_string(q) + " exceeds cap " +
                        std::to_string(caps.taylor_q) +
                        " (use the splitting module, or raise PRUNED_CAP_TAYLOR)");
  return CellComplex(ideal, std::nullopt);
}

CellComplex CellComplex::subcomplex(MonomialIdeal vertex_monomials, std::vector<Cell> faces) {
  CellComplex c(std::move(vertex_monomials), std::move(faces));
  // closure-under-subsets check (facet level suffices by induction)
  for (Cell f : *c.faces_)
    for (const auto& [facet, sign] : boundary(f)) {
      (void)sign;
      if (!c.contains(facet)) throw InvalidInputError("subcomplex: faces not closed under subsets");
    }
  return c;
}

void CellComplex::build_divtables() {
  int q = verts_.num_generators();
  int n = verts_.ambient();
  div_.assign(static_cast<std::size_t>(q), {});
  for (int j = 0; j < q; ++j) {
    const Monomial& mj = verts_.generator(j);
    for (int v = 1; v <= n; ++v) {
      auto need = mj.exponent(v);
      if (need == 0) continue;
      Cell mask = 0;
      for (int k = 0; k < q; ++k)
        if (verts_.generator(k).exponent(v) >= need) mask |= Cell{1} << k;
      div_[static_cast<std::size_t>(j)].push_back(mask);
    }
  }
}

std::size_t CellComplex::cell_count() const {
  if (faces_) return faces_->size();
  return std::size_t{1} << vertex_count();
}

bool CellComplex::contains(Cell c) const {
  if (faces_) return face_set_.find(c) != face_set_.end();
  if (vertex_count() >= 64) return true;
  return c < (Cell{1} << vertex_count());
}

const std::vector<Cell>& CellComplex::cells() const {
  if (faces_) return *faces_;
  if (all_cells_.empty() && cell_count() > 0) {
    all_cells_.resize(cell_count());
    std::iota(all_cells_.begin(), all_cells_.end(), Cell{0});
  }
  return all_cells_;
}

Monomial CellComplex::grade(Cell c) const {
  Monomial m = Monomial::one(verts_.ambient());
  for (Cell rest = c; rest; rest &= rest - 1) {
    int j = __builtin_ctzll(rest);
    m = lcm(m, verts_.generator(j));
  }
  return m;
}

bool CellComplex::vertex_divides(int j, Cell c) const {
  for (Cell mask : div_[static_cast<std::size_t>(j)])
    if ((c & mask) == 0) return false;
  return true;
}

bool CellComplex::grade_equal_up(Cell c, int j) const {
  // gr(c) = gr(c|e_j) iff m_j divides m_c; for empty c only a unit vertex works
  return vertex_divides(j, c);
}

}  // namespace pruned
