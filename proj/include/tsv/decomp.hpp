#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsv/endalg.hpp"
#include "tsv/symplectic.hpp"

namespace tsv {

enum class TrichotomyCase { BetaIsogeny, GammaIsogeny, GraphIso };
std::string to_string(TrichotomyCase c);

struct Trichotomy {
  TrichotomyCase which = TrichotomyCase::GraphIso;
  /// |det T_beta| or |det T_gamma| for the isogeny cases, 1 for GraphIso.
  Integer degree = 1;
  DivisionVerdict division_hypothesis;
};

/// Sorts a symplectic block map into the beta-isogeny / gamma-isogeny / graph
/// trichotomy. Throws NotApplicable when f is not symplectic or End^0(A) is
/// not certified as a division algebra, and TheoremViolation when a case
/// assertion fails.
Trichotomy classify(const BlockIso& f);
/// Same, with the division verdict of End^0(A) precomputed.
Trichotomy classify(const BlockIso& f, const DivisionVerdict& hypothesis);

enum class RecipeTag { OrlovConstruction, PoincareConjugated, GraphKernel };
std::string to_string(RecipeTag tag);

/// Symbolic description of the kernel realizing f. The Orlov construction is
/// opaque: only its input blocks are recorded.
struct KernelRecipe {
  RecipeTag tag = RecipeTag::GraphKernel;
  Trichotomy classification;
  /// OrlovConstruction: blocks of f. PoincareConjugated: blocks of the inner
  /// (f^ddagger)^s. GraphKernel: alpha in slot 0.
  std::vector<IntMatrix> blocks;
  /// psi_{L_A} and psi_{L_B}^{-1} for PoincareConjugated.
  std::optional<IntMatrix> pre;
  std::optional<IntMatrix> post;
  IntMatrix reconstruction;
  bool verified = false;

  std::string describe() const;
};

KernelRecipe kernel_recipe(const BlockIso& f);
KernelRecipe kernel_recipe(const BlockIso& f, const DivisionVerdict& hypothesis);

/// A symplectic block map A x A^ -> B x B^ whose four blocks are bounded
/// combinations of their hom lattices, if one exists within the bound.
std::optional<BlockIso> find_symplectic_iso(const ComplexTorus& a, const ComplexTorus& b, long bound,
                                            std::size_t max_candidates = 2'000'000);

/// All distinct products of at most `max_length` generators (exact matrix
/// dedup), in breadth-first order.
std::vector<BlockIso> enumerate_words(const std::vector<BlockIso>& generators, std::size_t max_length);
std::vector<BlockIso> enumerate_words_parallel(const std::vector<BlockIso>& generators, std::size_t max_length);

enum class Execution { Serial, Parallel };

struct BatchEntry {
  std::size_t index = 0;
  std::string outcome;  // "BetaIsogeny", "GammaIsogeny", "GraphIso", "NotApplicable", "TheoremViolation"
  std::string detail;   // recipe description, reason, or violation dump
};

struct BatchReport {
  std::string source;
  std::string target;
  std::size_t word_length = 0;
  long bound = 0;
  std::size_t total = 0;
  std::map<std::string, std::size_t> counts;
  std::vector<BatchEntry> entries;  // sorted by index
  std::string note;

  std::size_t violations() const;
  std::size_t count(const std::string& outcome) const;
};

/// Enumerates Sp(A x A^, B x B^) elements as words up to `word_length` over
/// sp_generators(A, bound) (composed with one base isomorphism when B != A),
/// classifies each and builds their recipes.
BatchReport verify_batch(const ComplexTorus& a, const ComplexTorus& b, std::size_t word_length, long bound = 2,
                         Execution execution = Execution::Parallel);

/// Classification of a list of block maps sharing source torus, one entry per
/// input in input order.
std::vector<BatchEntry> classify_all(const std::vector<BlockIso>& elements, const DivisionVerdict& hypothesis,
                                     Execution execution);

}  // namespace tsv
