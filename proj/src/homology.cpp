#include "fibrekit/homology.hpp"

#include <algorithm>

#include "fibrekit/errors.hpp"
#include "fibrekit/smith.hpp"

namespace fibrekit {

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

namespace {

std::size_t matrix_rank(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  return smith_normal_form(m).rank();
}

}  // namespace

HomologyGroup ChainComplex::homology(int degree) const {
  int index = degree - low_degree;
  if (index < 0 || index >= static_cast<int>(ranks.size())) return {};
  auto i = static_cast<std::size_t>(index);
  std::size_t rank_out = i == 0 ? 0 : matrix_rank(boundaries[i]);
  HomologyGroup h;
  std::size_t rank_in = 0;
  if (i + 1 < ranks.size()) {
    const auto& incoming = boundaries[i + 1];
    if (incoming.rows() && incoming.cols() && !incoming.is_zero()) {
      auto snf = smith_normal_form(incoming);
      rank_in = snf.rank();
      h.torsion = snf.torsion();
    }
  }
  h.free_rank = ranks[i] - rank_out - rank_in;
  return h;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
  auto cols = k.simplices(dim);
  auto rows = k.simplices(dim - 1);
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& s = cols[j];
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      auto face = s.without(pos);
      auto it = std::lower_bound(rows.begin(), rows.end(), face);
      m(static_cast<std::size_t>(it - rows.begin()), j) = (pos % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

ChainComplex augmented_chain_complex(const SimplicialComplex& k) {
  ChainComplex c;
  c.low_degree = -1;
  int top = k.dimension();
  c.ranks.push_back(1);
  c.boundaries.emplace_back(0, 1);
  for (int d = 0; d <= top; ++d) {
    c.ranks.push_back(k.simplex_count(d));
    c.boundaries.push_back(boundary_matrix(k, d));
  }
  return c;
}

HomologyGroup reduced_homology(const SimplicialComplex& k, int degree) {
  if (degree < -1) throw PreconditionError("reduced_homology: degree must be >= -1");
  if (degree > k.dimension()) return {};
  // Only the two boundary maps adjacent to this degree are needed.
  ChainComplex c;
  c.low_degree = degree;
  c.ranks.push_back(k.simplex_count(degree));
  c.boundaries.emplace_back();
  if (degree + 1 <= k.dimension()) {
    c.ranks.push_back(k.simplex_count(degree + 1));
    c.boundaries.push_back(boundary_matrix(k, degree + 1));
  }
  HomologyGroup h;
  h = c.homology(degree);
  if (degree >= 0) {
    auto outgoing = boundary_matrix(k, degree);
    h.free_rank -= matrix_rank(outgoing);
  }
  return h;
}

std::vector<HomologyGroup> reduced_homology_all(const SimplicialComplex& k) {
  auto c = augmented_chain_complex(k);
  std::vector<HomologyGroup> out;
  long long chain_euler = 0;
  long long homology_euler = 0;
  for (int d = -1; d <= k.dimension(); ++d) {
    out.push_back(c.homology(d));
    long long sign = (d % 2 == 0) ? 1 : -1;
    chain_euler += sign * static_cast<long long>(c.ranks[static_cast<std::size_t>(d + 1)]);
    homology_euler += sign * static_cast<long long>(out.back().free_rank);
  }
  if (chain_euler != homology_euler) {
    throw InternalError("reduced Euler characteristic mismatch");
  }
  return out;
}

std::optional<int> first_nonacyclic_degree(const SimplicialComplex& k, int n) {
  if (n < -1) return std::nullopt;
  if (k.is_empty()) return -1;
  int top = std::min(n, k.dimension());
  for (int d = 0; d <= top; ++d) {
    if (!reduced_homology(k, d).trivial()) return d;
  }
  return std::nullopt;
}

bool is_n_acyclic(const SimplicialComplex& k, int n) {
  return !first_nonacyclic_degree(k, n).has_value();
}

}  // namespace fibrekit
