#pragma once

#include <optional>

#include "swlearn/hypothesis.hpp"
#include "swlearn/oracle.hpp"
#include "swlearn/system.hpp"
#include "swlearn/word.hpp"

namespace swlearn {

/// Exhaustive bounded language comparison, the information-faithful check:
/// walks every word of length 1..max_len in length-lexicographic order and
/// returns the first one the hypothesis misclassifies against the oracle, or
/// nullopt when the bounded languages coincide. Throws CapacityError when
/// the enumeration would exceed the budget.
std::optional<Word> language_match(const HypothesisAutomaton& hypothesis,
                                   const SimulationOracle& oracle, int alphabet_size,
                                   int max_len,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// White-box substitute for tests and over-budget runs: BFS over the product
/// of the hypothesis walk and the ground truth's reachable-node sets,
/// returning the length-lex-minimal word (up to max_len) in the symmetric
/// difference of the two languages, or nullopt when none exists. The learner
/// proper must not see the ground truth; keep this behind the white-box
/// boundary.
std::optional<Word> product_diff_search(const HypothesisAutomaton& hypothesis,
                                        const RestrictionAutomaton& truth, int max_len);

/// White-box minimality oracle: determinizes the ground truth's path
/// language by subset construction (dropping the empty-set sink), then
/// merges equivalent states by partition refinement.
HypothesisAutomaton minimal_dfa_of(const RestrictionAutomaton& truth);

} // namespace swlearn
