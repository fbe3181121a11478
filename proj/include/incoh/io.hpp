#pragma once

#include <stdexcept>
#include <string>

#include "incoh/channels.hpp"
#include "incoh/measurement.hpp"
#include "incoh/states.hpp"

namespace incoh {

// Raised on malformed input files; distinct from validation failures so the
// CLI can map parse errors and semantic errors to different exit codes.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON interchange. A matrix is {"rows": r, "cols": c, "re": [[...]], "im": [[...]]},
// with "im" optional (defaults to zero). States add an optional "dims" array of
// subsystem dimensions, POVMs are {"elements": [matrix, ...]}, channels are
// {"kraus": [matrix, ...]}.
std::string matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const std::string& text);

std::string state_to_json(const DensityMatrix& state);
DensityMatrix state_from_json(const std::string& text, double tol = validity_tol);

std::string povm_to_json(const Povm& m);
Povm povm_from_json(const std::string& text, double tol = validity_tol);

std::string channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const std::string& text, double tol = validity_tol);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Loads a state from a catalog name ("max_ent_pm", "ghz", ...) or a JSON file path.
DensityMatrix load_state(const std::string& spec, double tol = validity_tol);
Povm load_povm(const std::string& path, double tol = validity_tol);
KrausChannel load_channel(const std::string& spec, double tol = validity_tol);

}  // namespace incoh
