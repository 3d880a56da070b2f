#include "jordanlab/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "jordanlab/centers.hpp"
#include "jordanlab/map_spaces.hpp"

namespace jordanlab {

namespace {

/// Catalog entries with memoized spaces, shared by all checks of one run.
class Context {
 public:
  Context() {
    for (const std::string& name : verification_catalog_names()) {
      entries_.push_back(catalog_by_name(name, Field::rationals()));
    }
  }

  std::size_t size() const { return entries_.size(); }
  const CatalogEntry& entry(std::size_t i) const { return entries_[i]; }
  const StructureConstantAlgebra& alg(std::size_t i) const { return entries_[i].algebra; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].algebra.name() == name) return i;
    }
    throw InputError("no catalog entry named '" + name + "'");
  }

  const CenterChain& chain(std::size_t i) {
    auto it = chains_.find(i);
    if (it == chains_.end()) it = chains_.emplace(i, center_chain(alg(i))).first;
    return it->second;
  }

  const Subspace& space(std::size_t i, MapKind k) {
    auto key = std::make_pair(i, k);
    auto it = spaces_.find(key);
    if (it == spaces_.end()) it = spaces_.emplace(key, compute(i, k)).first;
    return it->second;
  }

  bool semiprime(std::size_t i) {
    auto it = semiprime_.find(i);
    if (it == semiprime_.end()) it = semiprime_.emplace(i, is_semiprime_char0(alg(i))).first;
    return it->second;
  }

 private:
  Subspace compute(std::size_t i, MapKind k) {
    const StructureConstantAlgebra& a = alg(i);
    switch (k) {
      case MapKind::Cent: return cent_space(a).space;
      case MapKind::JCent: return jcent_space(a).space;
      case MapKind::QJCent: return qjcent_space(a).space;
      case MapKind::Der: return der_space(a).space;
      case MapKind::JDer: return jder_space(a).space;
      case MapKind::QJDer: return qjder_space(a).space;
      case MapKind::GJDer: return gjder_space(a).space;
      case MapKind::FGDer: return fgder_space(a).space;
    }
    throw Error("unhandled map kind");
  }

  std::vector<CatalogEntry> entries_;
  std::map<std::size_t, CenterChain> chains_;
  std::map<std::pair<std::size_t, MapKind>, Subspace> spaces_;
  std::map<std::size_t, bool> semiprime_;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& note) {
    if (!cond) pass = false;
    notes.push_back((cond ? "" : "FAILED: ") + note);
  }

  std::string details() const {
    std::string out;
    for (std::size_t i = 0; i < notes.size(); ++i) {
      if (i) out += "; ";
      out += notes[i];
    }
    return out;
  }
};

std::string dim_note(const std::string& name, const char* what, std::size_t got) {
  return name + ": dim " + what + " = " + std::to_string(got);
}

using CheckFn = std::function<Outcome(Context&)>;

struct CheckDef {
  const char* id;
  const char* statement;
  CheckFn fn;
};

Outcome check_t21a(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Subspace& gj = ctx.space(i, MapKind::GJDer);
    Subspace s = subspace_sum(ctx.space(i, MapKind::QJCent), ctx.space(i, MapKind::QJDer));
    o.expect(gj == s, ctx.alg(i).name() + ": GJDer (dim " + std::to_string(gj.dim()) +
                          ") = QJCent + QJDer (dim " + std::to_string(s.dim()) + ")");
  }
  return o;
}

Outcome check_t21b(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Subspace& jc = ctx.space(i, MapKind::JCent);
    Subspace s = subspace_intersect(ctx.space(i, MapKind::QJCent), ctx.space(i, MapKind::QJDer));
    o.expect(jc == s, ctx.alg(i).name() + ": JCent (dim " + std::to_string(jc.dim()) +
                          ") = QJCent ∩ QJDer (dim " + std::to_string(s.dim()) + ")");
  }
  return o;
}

Outcome check_t23(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!ctx.semiprime(i)) continue;
    Subspace s = subspace_sum(ctx.space(i, MapKind::Cent), ctx.space(i, MapKind::Der));
    o.expect(ctx.space(i, MapKind::GJDer) == s,
             ctx.alg(i).name() + " (semiprime): GJDer = Cent + Der, dim " + std::to_string(s.dim()));
  }
  o.expect(!o.notes.empty(), "at least one semiprime entry present");
  return o;
}

Outcome check_ex2_t2(Context& ctx) {
  Outcome o;
  const std::size_t i = ctx.index_of("T2");
  const StructureConstantAlgebra& a = ctx.alg(i);
  const Vec e12 = a.basis_vector(1);
  const Vec f = vec_of_map(a.jordan_mult(e12));
  o.expect(ctx.space(i, MapKind::QJCent).contains(f), "T2: e12∘- is a quasi Jordan centralizer");
  o.expect(!ctx.space(i, MapKind::JCent).contains(f), "T2: e12∘- is not a Jordan centralizer");
  o.expect(!ctx.space(i, MapKind::FGDer).contains(f),
           "T2: e12∘- is not the h-map of any (f, g) pair");
  Vec alpha = extract_alpha(a, a.jordan_mult(e12));
  o.expect(vec_eq(alpha, e12), "T2: extracted α equals e12");
  o.expect(!ctx.chain(i).z_j.contains(e12), "T2: e12 lies outside Z_J");
  return o;
}

Outcome check_r22(Context& ctx) {
  Outcome o;
  for (const char* name : {"T2", "T3"}) {
    const std::size_t i = ctx.index_of(name);
    const Subspace& jc = ctx.space(i, MapKind::JCent);
    const Subspace& qjc = ctx.space(i, MapKind::QJCent);
    o.expect(subspace_leq(jc, qjc) && jc.dim() < qjc.dim(),
             std::string(name) + ": JCent (dim " + std::to_string(jc.dim()) +
                 ") strictly below QJCent (dim " + std::to_string(qjc.dim()) + ")");
  }
  return o;
}

Outcome correspondence(Context& ctx, MapKind kind, const char* kind_name,
                       const std::function<const Subspace&(const CenterChain&)>& pick) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const StructureConstantAlgebra& a = ctx.alg(i);
    const Subspace& maps = ctx.space(i, kind);
    const Subspace& zs = pick(ctx.chain(i));
    bool ok = maps.dim() == zs.dim();
    // α∘- lands in the space for every α in the center-like set...
    for (std::size_t r = 0; ok && r < zs.dim(); ++r) {
      ok = maps.contains(vec_of_map(a.jordan_mult(zs.basis_row(r))));
    }
    // ...and every member of the space arises that way.
    const Scalar half = Scalar::one(a.field()) / Scalar::of_int(2, a.field());
    for (std::size_t r = 0; ok && r < maps.dim(); ++r) {
      Matrix f = map_of_vec(maps.basis_row(r), a.dim());
      Vec alpha = scaled(mat_vec(f, a.unit()), half);
      ok = zs.contains(alpha) && vec_eq(vec_of_map(a.jordan_mult(alpha)), maps.basis_row(r));
    }
    o.expect(ok, a.name() + ": " + kind_name + " = {α∘- : α} with matching dim " +
                     std::to_string(maps.dim()));
  }
  return o;
}

Outcome check_t32a(Context& ctx) {
  Outcome o = correspondence(ctx, MapKind::QJCent, "QJCent",
                             [](const CenterChain& c) -> const Subspace& { return c.z_q; });
  // extract_alpha must accept every basis element of QJCent.
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const StructureConstantAlgebra& a = ctx.alg(i);
    const Subspace& maps = ctx.space(i, MapKind::QJCent);
    bool ok = true;
    for (std::size_t r = 0; ok && r < maps.dim(); ++r) {
      try {
        extract_alpha(a, map_of_vec(maps.basis_row(r), a.dim()));
      } catch (const Error&) {
        ok = false;
      }
    }
    o.expect(ok, a.name() + ": extract_alpha succeeds on the QJCent basis");
  }
  return o;
}

Outcome check_t32b(Context& ctx) {
  return correspondence(ctx, MapKind::JCent, "JCent",
                        [](const CenterChain& c) -> const Subspace& { return c.z_j; });
}

Outcome check_c33(Context& ctx) {
  Outcome o;
  std::size_t premise_a = 0, premise_b = 0, premise_c = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const CenterChain& ch = ctx.chain(i);
    const std::string& name = ctx.alg(i).name();
    if (ch.z_j == ch.z) {
      ++premise_a;
      o.expect(ctx.space(i, MapKind::JCent) == ctx.space(i, MapKind::Cent),
               name + ": Z_J = Z forces JCent = Cent");
    }
    if (ch.z_q == ch.z) {
      ++premise_b;
      o.expect(ctx.space(i, MapKind::QJCent) == ctx.space(i, MapKind::Cent),
               name + ": Z_Q = Z forces QJCent = Cent");
    }
    if (ch.z_q == ch.z_j) {
      ++premise_c;
      o.expect(ctx.space(i, MapKind::QJCent) == ctx.space(i, MapKind::JCent),
               name + ": Z_Q = Z_J forces QJCent = JCent");
    }
  }
  o.expect(premise_a > 0 && premise_b > 0 && premise_c > 0, "each premise is non-vacuous");
  return o;
}

Outcome check_p34(Context& ctx) {
  Outcome o;
  for (const char* name : {"M2", "M3"}) {
    const std::size_t i = ctx.index_of(name);
    const CenterChain& ch = ctx.chain(i);
    o.expect(ch.z_q == ch.z && ch.z.dim() == 1,
             std::string(name) + ": Z_Q = Z = scalars (dim 1)");
    o.expect(ctx.space(i, MapKind::QJCent) == ctx.space(i, MapKind::Cent),
             std::string(name) + ": QJCent = Cent");
  }
  return o;
}

Outcome check_p35(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const CatalogEntry& e = ctx.entry(i);
    bool sp = ctx.semiprime(i);
    if (e.semiprime) {
      o.expect(sp == *e.semiprime, e.algebra.name() + ": semiprime verdict is " +
                                       (sp ? "true" : "false") + " as expected");
    }
    if (sp) {
      o.expect(ctx.space(i, MapKind::QJCent) == ctx.space(i, MapKind::Cent),
               e.algebra.name() + " (semiprime): QJCent = Cent");
    }
  }
  return o;
}

Outcome check_p36(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const CatalogEntry& e = ctx.entry(i);
    if (e.idempotent_generators.empty()) continue;
    const StructureConstantAlgebra& a = e.algebra;
    bool idem = true;
    for (const Vec& g : e.idempotent_generators) idem = idem && a.is_idempotent(g);
    Subspace gen = subalgebra_generated(a, e.idempotent_generators, true);
    o.expect(idem && gen == Subspace::full_space(a.field(), a.dim()),
             a.name() + ": supplied idempotents generate the whole algebra");
    o.expect(ctx.space(i, MapKind::JCent) == ctx.space(i, MapKind::Cent),
             a.name() + ": JCent = Cent");
  }
  o.expect(!o.notes.empty(), "at least one idempotent-generated entry present");
  return o;
}

Outcome check_p37(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const CatalogEntry& e = ctx.entry(i);
    if (!e.condition3_idempotent) continue;
    const StructureConstantAlgebra& a = e.algebra;
    Idempotent idem(a, *e.condition3_idempotent);
    o.expect(idem.nontrivial(a) && check_condition_3(a, idem),
             a.name() + ": witness idempotent satisfies the Peirce kill condition");
    o.expect(ctx.space(i, MapKind::JCent) == ctx.space(i, MapKind::Cent),
             a.name() + ": JCent = Cent");
  }
  o.expect(!o.notes.empty(), "at least one witnessed entry present");
  return o;
}

Outcome check_c38(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const CatalogEntry& e = ctx.entry(i);
    if (!e.triangular) continue;
    const StructureConstantAlgebra& a = e.algebra;
    Idempotent idem(a, *e.condition3_idempotent);
    o.expect(peirce(a, idem).qe.dim() == 0, a.name() + ": e^perp A e = 0 (triangular form)");
    o.expect(ctx.space(i, MapKind::JCent) == ctx.space(i, MapKind::Cent),
             a.name() + ": JCent = Cent");
  }
  o.expect(!o.notes.empty(), "at least one triangular entry present");
  return o;
}

Outcome check_g33(Context& ctx) {
  Outcome o;
  const std::size_t i = ctx.index_of("grassmann3");
  const StructureConstantAlgebra& a = ctx.alg(i);
  const CenterChain& ch = ctx.chain(i);
  Subspace full = Subspace::full_space(a.field(), a.dim());
  o.expect(ch.z.dim() == 2 && ch.z != full, "Z has dim 2 and is proper");
  o.expect(ch.z_j == full && ch.z_q == full, "Z_J = Z_Q = whole algebra (dim 4)");
  const Subspace& jc = ctx.space(i, MapKind::JCent);
  const Subspace& ce = ctx.space(i, MapKind::Cent);
  o.expect(jc.dim() == 4 && ce.dim() == 2, "dim JCent = 4, dim Cent = 2");
  // Every α∘- is a Jordan centralizer; for α outside Z it is not a centralizer.
  std::vector<Vec> noncentral = {a.basis_vector(1), a.basis_vector(2),
                                 add(a.basis_vector(1), scaled(a.basis_vector(2), Scalar::of_int(3, a.field())))};
  for (const Vec& alpha : noncentral) {
    Vec f = vec_of_map(a.jordan_mult(alpha));
    o.expect(jc.contains(f) && !ce.contains(f),
             "α = " + a.format_element(alpha) + ": α∘- is a proper Jordan centralizer");
  }
  return o;
}

Outcome check_s34(Context& ctx) {
  Outcome o;
  const std::size_t i = ctx.index_of("primer");
  const CatalogEntry& e = ctx.entry(i);
  const CenterChain& ch = ctx.chain(i);
  o.expect(ch.z.dim() == 3 && ch.z_j.dim() == 4 && ch.z_q.dim() == 5,
           "(dim Z, dim Z_J, dim Z_Q) = (" + std::to_string(ch.z.dim()) + ", " +
               std::to_string(ch.z_j.dim()) + ", " + std::to_string(ch.z_q.dim()) + ")");
  const Field& f = e.algebra.field();
  o.expect(ch.z == Subspace::span(f, 6, e.expected_bases.at("Z")), "Z basis is {1, e13+e24, e14}");
  o.expect(ch.z_j == Subspace::span(f, 6, e.expected_bases.at("ZJ")),
           "Z_J basis is {1, e13, e24, e14}");
  o.expect(ch.z_q == Subspace::span(f, 6, e.expected_bases.at("ZQ")),
           "Z_Q basis is {1, e13, e24, e14, e23}");
  return o;
}

Outcome check_s40(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Subspace meet = subspace_intersect(ctx.space(i, MapKind::JCent), ctx.space(i, MapKind::JDer));
    o.expect(meet.dim() == 0, ctx.alg(i).name() + ": JCent ∩ JDer = {0}");
  }
  return o;
}

Outcome check_l41(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const StructureConstantAlgebra& a = ctx.alg(i);
    const std::size_t n = a.dim();
    const Subspace& qjd = ctx.space(i, MapKind::QJDer);
    Subspace split = subspace_sum(ctx.space(i, MapKind::JCent), ctx.space(i, MapKind::JDer));

    // Both sides of the criterion are subspaces of QJDer, so the claim is a
    // subspace identity: {f in QJDer : f(1) in Z_J} = JCent + JDer.
    // The left side is QJDer ∩ nullspace of vec(f) -> [[f(1), e_i], e_j].
    std::vector<Matrix> br;
    for (std::size_t b = 0; b < n; ++b) {
      br.push_back(mat_sub(a.right_mult(a.basis_vector(b)), a.left_mult(a.basis_vector(b))));
    }
    std::vector<Matrix> blocks;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Matrix cond = mat_mul(br[y], br[x]);
        Matrix rows(n, n * n, a.field());
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t k = 0; k < n; ++k) {
            if (cond(m, k).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
              if (!a.unit()[c].is_zero()) rows(m, c * n + k) += cond(m, k) * a.unit()[c];
            }
          }
        }
        blocks.push_back(std::move(rows));
      }
    }
    Subspace unit_image_in_zj = nullspace(vstack(blocks));
    o.expect(subspace_intersect(qjd, unit_image_in_zj) == split,
             a.name() + ": {f ∈ QJDer : f(1) ∈ Z_J} = JCent + JDer as subspaces");

    // The same statement sampled pointwise over the QJDer basis.
    const CenterChain& ch = ctx.chain(i);
    bool ok = true;
    for (std::size_t r = 0; ok && r < qjd.dim(); ++r) {
      Matrix f = map_of_vec(qjd.basis_row(r), n);
      bool f1_in_zj = ch.z_j.contains(mat_vec(f, a.unit()));
      bool in_split = split.contains(qjd.basis_row(r));
      ok = (f1_in_zj == in_split);
    }
    o.expect(ok, a.name() + ": f(1) ∈ Z_J iff f ∈ JCent + JDer, over the QJDer basis");
  }
  return o;
}

Outcome check_ex4(Context& ctx) {
  Outcome o;
  const std::size_t i = ctx.index_of("primer");
  const StructureConstantAlgebra& a = ctx.alg(i);
  auto [f, h] = section4_example_maps();
  o.expect(!first_gjd_violation(a, f, f, h).has_value(),
           "f(x)∘y + x∘f(y) = h(x∘y) on all 36 basis pairs");
  o.expect(ctx.space(i, MapKind::QJDer).contains(vec_of_map(f)), "f is a quasi Jordan derivation");
  QJDerClassification cls = classify_qjder(a, f);
  const Vec e23 = a.basis_vector(5);
  o.expect(!cls.split && vec_eq(cls.alpha, e23), "classification: obstructed with α = e23");
  // d = f - e23∘-, evaluated at x = e12+e34: d(x)∘x + x∘d(x) = -4*e14.
  Matrix d = mat_sub(f, a.jordan_mult(e23));
  const Vec x = a.basis_vector(1);
  Vec dx = mat_vec(d, x);
  Vec val = add(a.jordan(dx, x), a.jordan(x, dx));
  Vec expected = scaled(a.basis_vector(4), Scalar::of_int(-4, a.field()));
  o.expect(vec_eq(val, expected), "d(x)∘x + x∘d(x) = -4*e14 at x = e12+e34");
  o.expect(is_zero_vec(a.jordan(x, x)), "x∘x = 0 at x = e12+e34");
  return o;
}

Outcome check_p42(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx.entry(i).idempotent_generators.empty()) continue;
    Subspace s = subspace_sum(ctx.space(i, MapKind::Cent), ctx.space(i, MapKind::JDer));
    o.expect(ctx.space(i, MapKind::QJDer) == s,
             ctx.alg(i).name() + ": QJDer = Cent + JDer, dim " + std::to_string(s.dim()));
  }
  o.expect(!o.notes.empty(), "at least one idempotent-generated entry present");
  return o;
}

Outcome qjder_cent_der(Context& ctx, std::size_t i, Outcome& o) {
  Subspace s = subspace_sum(ctx.space(i, MapKind::Cent), ctx.space(i, MapKind::Der));
  o.expect(ctx.space(i, MapKind::QJDer) == s,
           ctx.alg(i).name() + ": QJDer = Cent + Der, dim " + std::to_string(s.dim()));
  return o;
}

Outcome check_c44(Context& ctx) {
  Outcome o;
  for (const char* name : {"M2", "M3"}) qjder_cent_der(ctx, ctx.index_of(name), o);
  return o;
}

Outcome check_c45(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx.entry(i).triangular) qjder_cent_der(ctx, i, o);
  }
  o.expect(!o.notes.empty(), "at least one triangular entry present");
  return o;
}

Outcome check_c46(Context& ctx) {
  Outcome o;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx.semiprime(i)) qjder_cent_der(ctx, i, o);
  }
  o.expect(!o.notes.empty(), "at least one semiprime entry present");
  return o;
}

const std::vector<CheckDef>& check_definitions() {
  static const std::vector<CheckDef> defs = {
      {"T2.1a", "GJDer = QJCent + QJDer on every catalog algebra", check_t21a},
      {"T2.1b", "JCent = QJCent ∩ QJDer on every catalog algebra", check_t21b},
      {"T2.3", "GJDer = Cent + Der on semiprime catalog algebras", check_t23},
      {"Ex2-T2",
       "On T2 the map e12∘- is a proper quasi Jordan centralizer and is not the h-map of any pair",
       check_ex2_t2},
      {"R2.2", "JCent ≠ QJCent on T2 and T3", check_r22},
      {"T3.2a", "QJCent = {α∘- : α ∈ Z_Q}, dim QJCent = dim Z_Q", check_t32a},
      {"T3.2b", "JCent = {α∘- : α ∈ Z_J}, dim JCent = dim Z_J", check_t32b},
      {"C3.3", "center equalities force the matching map-space equalities", check_c33},
      {"P3.4", "matrix algebras: Z_Q = Z and QJCent = Cent", check_p34},
      {"P3.5", "semiprime catalog algebras: QJCent = Cent", check_p35},
      {"P3.6", "idempotent-generated algebras: JCent = Cent", check_p36},
      {"P3.7", "nontrivial idempotent with the Peirce kill condition: JCent = Cent", check_p37},
      {"C3.8", "triangular catalog algebras: JCent = Cent", check_c38},
      {"G3.3", "commutator-central algebra: Z ≠ A = Z_J = Z_Q, proper Jordan centralizers exist",
       check_g33},
      {"S3.4", "primer algebra: center chain dims (3, 4, 5) with the expected bases", check_s34},
      {"S4.0", "JCent ∩ JDer = {0} on every catalog algebra", check_s40},
      {"L4.1", "for f ∈ QJDer: f ∈ JCent + JDer iff f(1) ∈ Z_J", check_l41},
      {"Ex4", "the obstructed quasi Jordan derivation on the primer algebra behaves as computed",
       check_ex4},
      {"P4.2", "idempotent-generated algebras: QJDer = Cent + JDer", check_p42},
      {"C4.4", "matrix algebras: QJDer = Cent + Der", check_c44},
      {"C4.5", "triangular catalog algebras: QJDer = Cent + Der", check_c45},
      {"C4.6", "semiprime catalog algebras: QJDer = Cent + Der", check_c46},
  };
  return defs;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const CheckDef& d : check_definitions()) ids.emplace_back(d.id);
  return ids;
}

VerificationReport run_verification(const std::vector<std::string>& ids) {
  const std::vector<CheckDef>& defs = check_definitions();
  std::vector<const CheckDef*> selected;
  if (ids.empty()) {
    for (const CheckDef& d : defs) selected.push_back(&d);
  } else {
    for (const std::string& id : ids) {
      const CheckDef* found = nullptr;
      for (const CheckDef& d : defs) {
        if (id == d.id) {
          found = &d;
          break;
        }
      }
      if (!found) throw InputError("unknown check id '" + id + "'");
      selected.push_back(found);
    }
  }
  Context ctx;
  VerificationReport rep;
  for (const CheckDef* d : selected) {
    Outcome o = d->fn(ctx);
    rep.results.push_back({d->id, d->statement, o.pass, o.details()});
  }
  return rep;
}

std::string report_table(const VerificationReport& rep) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckResult& r : rep.results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.statement << "\n";
    if (!r.details.empty()) os << "       " << r.details << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << rep.results.size() << " checks passed\n";
  return os.str();
}

nlohmann::json report_json(const VerificationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const CheckResult& r : rep.results) {
    checks.push_back({{"id", r.id},
                      {"statement", r.statement},
                      {"status", r.pass ? "pass" : "fail"},
                      {"details", r.details}});
    if (r.pass) ++passed;
  }
  return {{"checks", checks}, {"passed", passed}, {"total", rep.results.size()}};
}

}  // namespace jordanlab
