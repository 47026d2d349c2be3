#pragma once
#include <string>
#include <vector>

#include "shiftlab/kernel.hpp"
#include "shiftlab/lp.hpp"
#include "shiftlab/polynomial.hpp"
#include "shiftlab/spectra.hpp"
#include "shiftlab/truncation.hpp"

namespace shiftlab {

// JSON / CSV text for the documented wire formats. All output is
// deterministic: object keys are emitted in sorted order.

std::string to_json_text(const GammaSequence& gamma);
std::string to_csv_text(const GammaSequence& gamma);  // rows "n,gamma"

std::string to_json_text(const NormBracket& bracket);

std::string kernel_class_json(std::int64_t m, std::int64_t M, double p, const KernelClass& cls);

std::string to_json_text(const LevelPowerSums& sums);
std::string to_csv_text(const LevelPowerSums& sums);  // rows "k,sigma_k,ratio"

std::string to_json_text(const Polynomial& poly);  // coefficient array, ascending
std::string roots_json(const Polynomial& poly, const std::vector<double>& roots);

std::string to_json_text(const Spectrum& spectrum);
std::string membership_json(double lambda, const CombMembership& membership);

}  // namespace shiftlab
