#include <set>

#include "tsv/decomp.hpp"
#include "tsv/errors.hpp"

namespace tsv {

namespace {

// Appends the products of `frontier` x `generators` (index i * G + j) that are
// new, in that order. Shared by the serial and parallel versions so that both
// produce the same list.
void absorb(std::vector<BlockIso>& out, std::vector<BlockIso>& next, std::set<IntMatrix, MatrixLess>& seen,
            std::vector<std::optional<BlockIso>>& products) {
  for (auto& p : products) {
    if (!p || !seen.insert(p->rho()).second) continue;
    out.push_back(*p);
    next.push_back(std::move(*p));
  }
}

template <bool Parallel>
std::vector<BlockIso> enumerate(const std::vector<BlockIso>& generators, std::size_t max_length) {
  std::vector<BlockIso> out;
  if (max_length == 0 || generators.empty()) return out;
  std::set<IntMatrix, MatrixLess> seen;
  std::vector<BlockIso> frontier;
  for (const auto& g : generators) {
    if (seen.insert(g.rho()).second) {
      out.push_back(g);
      frontier.push_back(g);
    }
  }
  const std::size_t gens = generators.size();
  for (std::size_t length = 2; length <= max_length && !frontier.empty(); ++length) {
    std::vector<std::optional<BlockIso>> products(frontier.size() * gens);
    const long total = static_cast<long>(products.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (long k = 0; k < total; ++k) {
        products[k] = compose(frontier[k / gens], generators[k % gens]);
      }
    } else {
      for (long k = 0; k < total; ++k) products[k] = compose(frontier[k / gens], generators[k % gens]);
    }
    std::vector<BlockIso> next;
    absorb(out, next, seen, products);
    frontier = std::move(next);
  }
  return out;
}

BatchEntry classify_one(std::size_t index, const BlockIso& f, const DivisionVerdict& hypothesis) {
  BatchEntry entry;
  entry.index = index;
  try {
    KernelRecipe recipe = kernel_recipe(f, hypothesis);
    entry.outcome = to_string(recipe.classification.which);
    entry.detail = recipe.describe();
  } catch (const NotApplicable& e) {
    entry.outcome = "NotApplicable";
    entry.detail = e.what();
  } catch (const TheoremViolation& e) {
    entry.outcome = "TheoremViolation";
    entry.detail = e.what();
  } catch (const OracleDisagreement& e) {
    entry.outcome = "TheoremViolation";
    entry.detail = e.what();
  }
  return entry;
}

}  // namespace

std::vector<BlockIso> enumerate_words(const std::vector<BlockIso>& generators, std::size_t max_length) {
  return enumerate<false>(generators, max_length);
}

std::vector<BlockIso> enumerate_words_parallel(const std::vector<BlockIso>& generators, std::size_t max_length) {
  return enumerate<true>(generators, max_length);
}

std::vector<BatchEntry> classify_all(const std::vector<BlockIso>& elements, const DivisionVerdict& hypothesis,
                                     Execution execution) {
  std::vector<BatchEntry> out(elements.size());
  const long total = static_cast<long>(elements.size());
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < total; ++k) out[k] = classify_one(k, elements[k], hypothesis);
  } else {
    for (long k = 0; k < total; ++k) out[k] = classify_one(k, elements[k], hypothesis);
  }
  return out;
}

std::size_t BatchReport::violations() const { return count("TheoremViolation"); }

std::size_t BatchReport::count(const std::string& outcome) const {
  auto it = counts.find(outcome);
  return it == counts.end() ? 0 : it->second;
}

BatchReport verify_batch(const ComplexTorus& a, const ComplexTorus& b, std::size_t word_length, long bound,
                         Execution execution) {
  BatchReport report;
  report.source = a.name();
  report.target = b.name();
  report.word_length = word_length;
  report.bound = bound;

  auto generators = sp_generators(a, bound);
  auto words = execution == Execution::Parallel ? enumerate_words_parallel(generators, word_length)
                                                : enumerate_words(generators, word_length);
  std::vector<BlockIso> elements;
  if (a == b) {
    elements = std::move(words);
  } else {
    auto base = find_symplectic_iso(a, b, bound);
    if (!base) {
      report.note = "no symplectic isomorphism " + a.name() + " x " + a.name() + "^ -> " + b.name() + " x " +
                    b.name() + "^ with blocks bounded by " + std::to_string(bound);
      return report;
    }
    report.note = "words composed with base isomorphism " + format_matrix(base->rho());
    elements.reserve(words.size());
    for (const auto& w : words) elements.push_back(compose(*base, w));
  }

  report.entries = classify_all(elements, division_verdict(end_algebra(a)), execution);
  report.total = report.entries.size();
  for (const auto& e : report.entries) ++report.counts[e.outcome];
  return report;
}

}  // namespace tsv
