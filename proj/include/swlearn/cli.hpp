#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "swlearn/lstar.hpp"
#include "swlearn/random_gen.hpp"

namespace swlearn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitRuntimeError = 3;  // oracle or solver failure
inline constexpr int kExitBudgetExceeded = 4;

/// Runs subsystem recovery on the spec file and writes the coefficients
/// report; progress and errors go to the two streams.
int cmd_learn_models(const std::filesystem::path& spec_path,
                     const std::filesystem::path& out_path, std::ostream& out,
                     std::ostream& err);

/// Runs the automaton learner and writes the hypothesis DOT plus the trace
/// log.
int cmd_learn_automaton(const std::filesystem::path& spec_path,
                        const std::filesystem::path& dot_path,
                        const std::filesystem::path& trace_path,
                        const LearnerOptions& options, std::ostream& out,
                        std::ostream& err);

/// Runs both phases and writes models.json, automaton.dot, and trace.log
/// into out_dir.
int cmd_learn_all(const std::filesystem::path& spec_path,
                  const std::filesystem::path& out_dir, const LearnerOptions& options,
                  std::ostream& out, std::ostream& err);

/// Writes a seed-reproducible random ground-truth spec file.
int cmd_generate(const RandomSpecParams& params, std::uint64_t seed,
                 const std::filesystem::path& out_path, std::ostream& out,
                 std::ostream& err);

} // namespace swlearn::cli
