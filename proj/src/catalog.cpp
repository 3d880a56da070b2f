#include "jordanlab/catalog.hpp"

#include <numeric>

namespace jordanlab {

namespace {

std::string matrix_unit_label(std::size_t r, std::size_t c) {
  return "e" + std::to_string(r + 1) + std::to_string(c + 1);
}

/// Builds the subalgebra of M_size spanned by the given matrix-unit
/// positions; positions must be closed under composable products.
CatalogEntry matrix_unit_algebra(const std::string& name, std::size_t size,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                                 const Field& f) {
  const std::size_t dim = positions.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index[positions[i]] = i;

  std::vector<TableEntry> table;
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // e_{ab} e_{cd} = δ_{bc} e_{ad}
      if (positions[i].second != positions[j].first) continue;
      auto it = index.find({positions[i].first, positions[j].second});
      if (it == index.end()) throw InputError("matrix-unit positions are not closed: " + name);
      table.push_back({i, j, it->second, one});
    }
  }
  Vec unit = zero_vec(dim, f);
  for (std::size_t d = 0; d < size; ++d) {
    auto it = index.find({d, d});
    if (it == index.end()) throw InputError("matrix-unit algebra is missing a diagonal unit: " + name);
    unit[it->second] = one;
  }
  std::vector<std::string> labels;
  for (const auto& [r, c] : positions) labels.push_back(matrix_unit_label(r, c));
  return CatalogEntry{StructureConstantAlgebra(name, dim, f, table, unit, labels)};
}

}  // namespace

CatalogEntry matrix_algebra(std::size_t n, const Field& f) {
  if (n < 1) throw InputError("matrix algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) positions.emplace_back(r, c);
  }
  CatalogEntry e = matrix_unit_algebra("M" + std::to_string(n), n, positions, f);
  e.expected_dims = {{"Z", 1}, {"ZJ", 1}, {"ZQ", 1}, {"Cent", 1}, {"JCent", 1}, {"QJCent", 1}};
  if (n >= 2) {
    e.expected_dims["Der"] = n * n - 1;
    e.expected_dims["JDer"] = n * n - 1;
    e.expected_dims["QJDer"] = n * n;
    e.expected_dims["GJDer"] = n * n;
    // e_ii and e_ii + e_ij are idempotent; together they span everything.
    for (std::size_t i = 0; i < n; ++i) {
      Vec d = zero_vec(e.algebra.dim(), f);
      d[i * n + i] = Scalar::one(f);
      e.idempotent_generators.push_back(d);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Vec g = d;
        g[i * n + j] = Scalar::one(f);
        e.idempotent_generators.push_back(g);
      }
    }
    Vec e11 = zero_vec(e.algebra.dim(), f);
    e11[0] = Scalar::one(f);
    e.condition3_idempotent = e11;
  }
  e.semiprime = true;
  e.notes = "full matrix algebra";
  return e;
}

CatalogEntry upper_triangular(std::size_t n, const Field& f) {
  if (n < 1) throw InputError("triangular algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) positions.emplace_back(r, c);
  }
  CatalogEntry e = matrix_unit_algebra("T" + std::to_string(n), n, positions, f);
  e.expected_dims = {{"Z", 1}, {"ZJ", 1}, {"Cent", 1}, {"JCent", 1}};
  if (n >= 2) {
    e.expected_dims["ZQ"] = 2;     // 1 and e_{1n}
    e.expected_dims["QJCent"] = 2;
    e.triangular = true;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < positions.size(); ++i) index[positions[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
      Vec d = zero_vec(e.algebra.dim(), f);
      d[index[{i, i}]] = Scalar::one(f);
      e.idempotent_generators.push_back(d);
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec g = d;
        g[index[{i, j}]] = Scalar::one(f);
        e.idempotent_generators.push_back(g);
      }
    }
    Vec e11 = zero_vec(e.algebra.dim(), f);
    e11[0] = Scalar::one(f);
    e.condition3_idempotent = e11;
    e.semiprime = false;
  } else {
    e.semiprime = true;
  }
  if (n == 2) {
    e.expected_dims["Der"] = 2;
    e.expected_dims["JDer"] = 2;
    e.expected_dims["QJDer"] = 3;
    e.expected_dims["GJDer"] = 4;
  }
  e.notes = "upper triangular matrix algebra";
  return e;
}

CatalogEntry block_upper_triangular(const std::vector<std::size_t>& blocks, const Field& f) {
  if (blocks.empty()) throw InputError("block sizes must be nonempty");
  for (std::size_t b : blocks) {
    if (b == 0) throw InputError("block sizes must be positive");
  }
  const std::size_t size = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  std::vector<std::size_t> block_of(size);
  std::size_t at = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t k = 0; k < blocks[b]; ++k) block_of[at++] = b;
  }
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (block_of[r] <= block_of[c]) positions.emplace_back(r, c);
    }
  }
  std::string name = "block:";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) name += ",";
    name += std::to_string(blocks[b]);
  }
  CatalogEntry e = matrix_unit_algebra(name, size, positions, f);
  e.expected_dims = {{"Z", 1}, {"ZJ", 1}, {"Cent", 1}, {"JCent", 1}};
  if (blocks.size() >= 2) {
    e.triangular = true;
    e.semiprime = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < positions.size(); ++i) index[positions[i]] = i;
    for (std::size_t i = 0; i < size; ++i) {
      Vec d = zero_vec(e.algebra.dim(), f);
      d[index[{i, i}]] = Scalar::one(f);
      e.idempotent_generators.push_back(d);
      for (std::size_t j = 0; j < size; ++j) {
        if (i == j || block_of[i] > block_of[j]) continue;
        Vec g = d;
        g[index[{i, j}]] = Scalar::one(f);
        e.idempotent_generators.push_back(g);
      }
    }
    // e = sum of the first diagonal block's units: e^perp A e = 0.
    Vec first = zero_vec(e.algebra.dim(), f);
    for (std::size_t i = 0; i < blocks[0]; ++i) first[index[{i, i}]] = Scalar::one(f);
    e.condition3_idempotent = first;
  } else {
    e.semiprime = true;
  }
  e.notes = "block upper triangular matrix algebra";
  return e;
}

CatalogEntry grassmann3(const Field& f) {
  // Basis 1, e12, e23, e13 inside T_3.
  const Scalar one = Scalar::one(f);
  std::vector<TableEntry> table;
  for (std::size_t i = 0; i < 4; ++i) {
    table.push_back({0, i, i, one});
    if (i) table.push_back({i, 0, i, one});
  }
  table.push_back({1, 2, 3, one});  // e12 * e23 = e13
  Vec unit = unit_vec(4, 0, f);
  CatalogEntry e{StructureConstantAlgebra("grassmann3", 4, f, table, unit,
                                          {"1", "e12", "e23", "e13"})};
  e.expected_dims = {{"Z", 2},    {"ZJ", 4},    {"ZQ", 4},
                     {"Cent", 2}, {"JCent", 4}, {"QJCent", 4}};
  e.expected_bases["Z"] = {unit_vec(4, 0, f), unit_vec(4, 3, f)};
  e.semiprime = false;
  e.notes = "commutator-central algebra: [[x,y],z] = 0";
  return e;
}

CatalogEntry primer_algebra(const Field& f) {
  // Basis 1, e12+e34, e13, e24, e14, e23 inside M_4. Nonzero products of
  // non-unit basis elements: e13*(e12+e34) = e14, (e12+e34)*e24 = e14,
  // (e12+e34)*e23 = e13, e23*(e12+e34) = e24.
  const Scalar one = Scalar::one(f);
  std::vector<TableEntry> table;
  for (std::size_t i = 0; i < 6; ++i) {
    table.push_back({0, i, i, one});
    if (i) table.push_back({i, 0, i, one});
  }
  table.push_back({2, 1, 4, one});
  table.push_back({1, 3, 4, one});
  table.push_back({1, 5, 2, one});
  table.push_back({5, 1, 3, one});
  Vec unit = unit_vec(6, 0, f);
  CatalogEntry e{StructureConstantAlgebra("primer", 6, f, table, unit,
                                          {"1", "e12+e34", "e13", "e24", "e14", "e23"})};
  e.expected_dims = {{"Z", 3},    {"ZJ", 4},    {"ZQ", 5},
                     {"Cent", 3}, {"JCent", 4}, {"QJCent", 5}};
  auto base = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Vec> rows;
    for (std::size_t i : idx) rows.push_back(unit_vec(6, i, f));
    return rows;
  };
  // Z = <1, e13+e24, e14>; Z_J = <1, e13, e24, e14>; Z_Q adds e23.
  Vec mid = zero_vec(6, f);
  mid[2] = one;
  mid[3] = one;
  e.expected_bases["Z"] = {unit_vec(6, 0, f), mid, unit_vec(6, 4, f)};
  e.expected_bases["ZJ"] = base({0, 2, 3, 4});
  e.expected_bases["ZQ"] = base({0, 2, 3, 4, 5});
  e.semiprime = false;
  e.notes = "six-dimensional subalgebra of M4 with strict center chain";
  return e;
}

CatalogEntry direct_sum(const std::vector<CatalogEntry>& parts, const std::string& name) {
  if (parts.empty()) throw InputError("direct sum of nothing");
  const Field f = parts.front().algebra.field();
  std::size_t dim = 0;
  for (const CatalogEntry& p : parts) {
    if (p.algebra.field() != f) throw FieldMismatchError("direct sum field mismatch");
    dim += p.algebra.dim();
  }
  std::vector<TableEntry> table;
  Vec unit = zero_vec(dim, f);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const StructureConstantAlgebra& alg = parts[p].algebra;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        for (const auto& [k, c] : alg.table_at(i, j)) {
          table.push_back({offset + i, offset + j, offset + k, c});
        }
      }
    }
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      unit[offset + i] = alg.unit()[i];
      labels.push_back("A" + std::to_string(p) + "." + alg.labels()[i]);
    }
    offset += alg.dim();
  }
  return CatalogEntry{StructureConstantAlgebra(name, dim, f, table, unit, labels)};
}

std::pair<Matrix, Matrix> section4_example_maps() {
  const Field q = Field::rationals();
  Matrix f(6, 6, q), h(6, 6, q);
  f(5, 0) = Scalar::of_int(2, q);  // f(1) = 2*e23
  h(5, 0) = Scalar::of_int(4, q);  // h(1) = 4*e23
  h(2, 1) = Scalar::one(q);        // h(e12+e34) = e13 + e24
  h(3, 1) = Scalar::one(q);
  return {f, h};
}

CatalogEntry catalog_by_name(const std::string& name, const Field& f) {
  if (name == "F") return matrix_algebra(1, f);
  if (name == "grassmann3") return grassmann3(f);
  if (name == "primer") return primer_algebra(f);
  if (name.size() > 1 && (name[0] == 'M' || name[0] == 'T')) {
    std::size_t n = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (name[k] < '0' || name[k] > '9') throw InputError("unknown catalog name '" + name + "'");
      n = n * 10 + static_cast<std::size_t>(name[k] - '0');
    }
    return name[0] == 'M' ? matrix_algebra(n, f) : upper_triangular(n, f);
  }
  if (name.rfind("block:", 0) == 0) {
    std::vector<std::size_t> blocks;
    std::size_t cur = 0;
    bool have = false;
    for (std::size_t k = 6; k < name.size(); ++k) {
      char ch = name[k];
      if (ch == ',') {
        if (!have) throw InputError("bad block size list in '" + name + "'");
        blocks.push_back(cur);
        cur = 0;
        have = false;
      } else if (ch >= '0' && ch <= '9') {
        cur = cur * 10 + static_cast<std::size_t>(ch - '0');
        have = true;
      } else {
        throw InputError("bad block size list in '" + name + "'");
      }
    }
    if (!have) throw InputError("bad block size list in '" + name + "'");
    blocks.push_back(cur);
    return block_upper_triangular(blocks, f);
  }
  throw InputError("unknown catalog name '" + name + "'");
}

const std::vector<std::string>& verification_catalog_names() {
  static const std::vector<std::string> names = {"M2", "M3", "T2", "T3", "block:2,1", "grassmann3", "primer"};
  return names;
}

}  // namespace jordanlab
