#include "treespec/merge.hpp"

#include <algorithm>
#include <cmath>

#include "treespec/assigned.hpp"
#include "treespec/errors.hpp"

namespace treespec {

MergeCertificate verify_merge(std::span<const RootedTree> inputs, std::span<const unsigned> alphas) {
  RootedTree merged = merge_trees(inputs, alphas);
  IntPoly divisor{1};
  for (std::size_t j = 0; j < inputs.size(); ++j)
    if (alphas[j] > 1) divisor *= pow(charpoly_adjacency(inputs[j]), alphas[j] - 1);

  IntPoly merged_poly = charpoly_adjacency(merged);
  IntPoly quotient;
  const bool holds = divides(divisor, merged_poly, &quotient);
  return {std::move(merged), std::move(merged_poly), std::move(divisor),
          holds ? std::move(quotient) : IntPoly{}, holds};
}

MergeCertificate verify_corollary14(std::span<const RootedTree> inputs) {
  if (inputs.empty()) throw EmptyInput();
  const std::vector<unsigned> twos(inputs.size(), 2);
  return verify_merge(inputs, twos);
}

std::vector<MultiplicityCheck> check_merge_multiplicities(std::span<const RootedTree> inputs,
                                                          std::span<const unsigned> alphas,
                                                          const RootedTree& merged,
                                                          double slack) {
  if (inputs.size() != alphas.size())
    throw LengthMismatch("merge needs one multiplicity per input tree");
  std::vector<SpectrumReport> spectra;
  spectra.reserve(inputs.size());
  for (const auto& t : inputs) spectra.push_back(real_roots_with_multiplicity(charpoly_adjacency(t)));
  const SpectrumReport merged_spec = real_roots_with_multiplicity(charpoly_adjacency(merged));

  std::vector<MultiplicityCheck> out;
  auto seen = [&](double lambda) {
    for (const auto& c : out)
      if (std::fabs(c.eigenvalue - lambda) <= slack) return true;
    return false;
  };
  for (const auto& spec : spectra) {
    for (const auto& e : spec.entries) {
      if (seen(e.approx)) continue;
      MultiplicityCheck check{e.approx, 0, merged_spec.multiplicity_near(e.approx, slack)};
      for (std::size_t j = 0; j < inputs.size(); ++j)
        check.required += (alphas[j] - 1) * spectra[j].multiplicity_near(e.approx, slack);
      out.push_back(check);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MultiplicityCheck& a, const MultiplicityCheck& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

}  // namespace treespec
