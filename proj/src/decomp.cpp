#include "tsv/decomp.hpp"

#include "tsv/errors.hpp"
#include "tsv/smith.hpp"

namespace tsv {

std::string to_string(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::BetaIsogeny: return "BetaIsogeny";
    case TrichotomyCase::GammaIsogeny: return "GammaIsogeny";
    case TrichotomyCase::GraphIso: return "GraphIso";
  }
  return "?";
}

std::string to_string(RecipeTag tag) {
  switch (tag) {
    case RecipeTag::OrlovConstruction: return "OrlovConstruction";
    case RecipeTag::PoincareConjugated: return "PoincareConjugated";
    case RecipeTag::GraphKernel: return "GraphKernel";
  }
  return "?";
}

Trichotomy classify(const BlockIso& f) {
  return classify(f, division_verdict(end_algebra(f.source().base())));
}

Trichotomy classify(const BlockIso& f, const DivisionVerdict& hypothesis) {
  if (!is_symplectic(f).symplectic()) throw NotApplicable("not symplectic: " + f.dump());
  if (!hypothesis.is_division()) {
    throw NotApplicable("End^0(" + f.source().base().name() + ") is not certified division (" +
                        to_string(hypothesis.tag) + ")");
  }
  Trichotomy out;
  out.division_hypothesis = hypothesis;

  const IntMatrix& tb = f.beta().T();
  Integer det_beta = determinant(tb);
  if (sgn(det_beta) != 0) {
    out.which = TrichotomyCase::BetaIsogeny;
    out.degree = abs(det_beta);
    return out;
  }
  if (!tb.is_zero()) throw TheoremViolation("beta is nonzero but not an isogeny: " + f.dump());

  const IntMatrix& tg = f.gamma().T();
  if (!tg.is_zero()) {
    Integer det_gamma = determinant(tg);
    if (sgn(det_gamma) == 0) throw TheoremViolation("beta = 0 and gamma is nonzero but not an isogeny: " + f.dump());
    out.which = TrichotomyCase::GammaIsogeny;
    out.degree = abs(det_gamma);
    return out;
  }

  const IntMatrix& ta = f.alpha().T();
  Integer det_alpha = determinant(ta);
  if (det_alpha != 1 && det_alpha != -1) throw TheoremViolation("beta = gamma = 0 but alpha is not an isomorphism: " + f.dump());
  if (!(f.delta().T().transpose() * ta == IntMatrix::identity(ta.rows()))) {
    throw TheoremViolation("beta = gamma = 0 but delta^T alpha != Id: " + f.dump());
  }
  out.which = TrichotomyCase::GraphIso;
  out.degree = 1;
  return out;
}

std::string KernelRecipe::describe() const {
  std::string out = to_string(tag) + " [" + to_string(classification.which) + ", degree " +
                    classification.degree.get_str() + "]";
  switch (tag) {
    case RecipeTag::OrlovConstruction:
      out += " alpha=" + format_matrix(blocks[0]) + " beta=" + format_matrix(blocks[1]) +
             " gamma=" + format_matrix(blocks[2]) + " delta=" + format_matrix(blocks[3]);
      break;
    case RecipeTag::PoincareConjugated:
      out += " psi_B^-1 o Orlov(alpha=" + format_matrix(blocks[0]) + " beta=" + format_matrix(blocks[1]) +
             " gamma=" + format_matrix(blocks[2]) + " delta=" + format_matrix(blocks[3]) + ") o psi_A";
      break;
    case RecipeTag::GraphKernel:
      out += " O_Gamma(alpha=" + format_matrix(blocks[0]) + ")";
      break;
  }
  out += verified ? " verified" : " UNVERIFIED";
  return out;
}

KernelRecipe kernel_recipe(const BlockIso& f) {
  return kernel_recipe(f, division_verdict(end_algebra(f.source().base())));
}

KernelRecipe kernel_recipe(const BlockIso& f, const DivisionVerdict& hypothesis) {
  KernelRecipe out;
  out.classification = classify(f, hypothesis);
  switch (out.classification.which) {
    case TrichotomyCase::BetaIsogeny:
      out.tag = RecipeTag::OrlovConstruction;
      out.blocks = {f.alpha().T(), f.beta().T(), f.gamma().T(), f.delta().T()};
      out.reconstruction = block2x2(out.blocks[0], out.blocks[1], out.blocks[2], out.blocks[3]);
      break;
    case TrichotomyCase::GammaIsogeny: {
      out.tag = RecipeTag::PoincareConjugated;
      BlockIso inner = swap(ddagger(f));
      if (!(inner.beta().T() == -f.gamma().T())) {
        throw TheoremViolation("inner beta of (f^ddagger)^s is not -gamma: " + inner.dump());
      }
      if (!is_isogeny(inner.beta())) throw TheoremViolation("inner beta is not an isogeny: " + inner.dump());
      out.blocks = {inner.alpha().T(), inner.beta().T(), inner.gamma().T(), inner.delta().T()};
      out.pre = f.source().psi();
      out.post = unimodular_inverse(f.target().psi());
      if (!out.post) throw TheoremViolation("psi_L of " + f.target().base().name() + " is not invertible");
      out.reconstruction = *out.post * inner.rho() * *out.pre;
      break;
    }
    case TrichotomyCase::GraphIso: {
      out.tag = RecipeTag::GraphKernel;
      const IntMatrix& a = f.alpha().T();
      auto inv = unimodular_inverse(a.transpose());
      if (!inv) throw TheoremViolation("alpha is not invertible over Z: " + f.dump());
      out.blocks = {a};
      out.reconstruction = block_diagonal(a, *inv);
      break;
    }
  }
  out.verified = out.reconstruction == f.rho();
  if (!out.verified) {
    throw TheoremViolation(to_string(out.tag) + " reconstruction " + format_matrix(out.reconstruction) +
                           " differs from " + f.dump());
  }
  return out;
}

namespace {

std::vector<IntMatrix> bounded_block(const ComplexTorus& a, const ComplexTorus& b, long bound) {
  std::vector<IntMatrix> basis;
  for (const auto& h : hom_lattice(a, b)) basis.push_back(h.T());
  if (basis.empty()) return {IntMatrix(b.lattice_rank(), a.lattice_rank())};
  return bounded_lattice_elements(basis, bound);
}

}  // namespace

std::optional<BlockIso> find_symplectic_iso(const ComplexTorus& a, const ComplexTorus& b, long bound,
                                            std::size_t max_candidates) {
  if (a.g() != b.g()) return std::nullopt;
  const ComplexTorus a_dual = dual(a);
  const ComplexTorus b_dual = dual(b);
  auto alphas = bounded_block(a, b, bound);
  auto betas = bounded_block(a_dual, b, bound);
  auto gammas = bounded_block(a, b_dual, bound);
  auto deltas = bounded_block(a_dual, b_dual, bound);

  // f^dagger f = Id: alpha^T gamma and beta^T delta symmetric, and
  // delta^T alpha - beta^T gamma = Id. Pair the blocks up first.
  std::vector<std::pair<const IntMatrix*, const IntMatrix*>> left;   // (alpha, gamma)
  std::vector<std::pair<const IntMatrix*, const IntMatrix*>> right;  // (beta, delta)
  for (const auto& al : alphas)
    for (const auto& ga : gammas) {
      IntMatrix m = al.transpose() * ga;
      if (m == m.transpose()) left.emplace_back(&al, &ga);
    }
  for (const auto& be : betas)
    for (const auto& de : deltas) {
      IntMatrix m = be.transpose() * de;
      if (m == m.transpose()) right.emplace_back(&be, &de);
    }
  if (left.size() * right.size() > max_candidates) return std::nullopt;

  const IntMatrix id = IntMatrix::identity(a.lattice_rank());
  const SymplecticPair pa = build_pair(a);
  const SymplecticPair pb = build_pair(b);
  for (const auto& [al, ga] : left)
    for (const auto& [be, de] : right) {
      if (!(de->transpose() * *al - be->transpose() * *ga == id)) continue;
      BlockIso f(pa, pb, *al, *be, *ga, *de);
      if (is_symplectic(f).symplectic()) return f;
    }
  return std::nullopt;
}

}  // namespace tsv
