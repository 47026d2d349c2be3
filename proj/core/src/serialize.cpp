#include "shiftlab/serialize.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace shiftlab {

namespace {

using nlohmann::json;

json number_or_null(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

// integers that fit int64 stay numeric; anything larger is emitted as a string
json coefficient_json(const Rational& c) {
    namespace mp = boost::multiprecision;
    if (mp::denominator(c) == 1) {
        const BigInt& n = mp::numerator(c);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return n.convert_to<std::int64_t>();
    }
    return c.str();
}

}  // namespace

std::string to_json_text(const GammaSequence& gamma) {
    json doc;
    doc["family"] = gamma.family;
    doc["counts"] = gamma.counts;
    return doc.dump();
}

std::string to_csv_text(const GammaSequence& gamma) {
    std::ostringstream os;
    os << "n,gamma\n";
    for (std::size_t n = 0; n < gamma.counts.size(); ++n) os << n << ',' << gamma.counts[n] << '\n';
    return os.str();
}

std::string to_json_text(const NormBracket& bracket) {
    json doc;
    doc["family"] = bracket.family;
    doc["p"] = std::isinf(bracket.p) ? json("inf") : json(bracket.p);
    doc["lower"] = bracket.lower;
    doc["upper"] = bracket.upper;
    doc["witness"] = {{"kind", bracket.witness_kind}, {"n", bracket.witness_n}};
    return doc.dump();
}

std::string kernel_class_json(std::int64_t m, std::int64_t M, double p, const KernelClass& cls) {
    json doc;
    doc["m"] = m;
    doc["M"] = M;
    doc["p"] = std::isinf(p) ? json("inf") : json(p);
    doc["verdict"] = verdict_name(cls.verdict);
    doc["theorem"] = cls.rule;
    return doc.dump();
}

std::string to_json_text(const LevelPowerSums& sums) {
    json doc;
    doc["p"] = sums.p;
    doc["sums"] = sums.sums;
    json ratios = json::array();
    for (double r : sums.ratios) ratios.push_back(number_or_null(r));
    doc["ratios"] = ratios;
    return doc.dump();
}

std::string to_csv_text(const LevelPowerSums& sums) {
    std::ostringstream os;
    os << "k,sigma_k,ratio\n";
    os.precision(17);
    for (std::size_t k = 0; k < sums.sums.size(); ++k) {
        os << k << ',' << sums.sums[k] << ',';
        if (k < sums.ratios.size() && !std::isnan(sums.ratios[k])) os << sums.ratios[k];
        os << '\n';
    }
    return os.str();
}

std::string to_json_text(const Polynomial& poly) {
    json doc;
    json coeffs = json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(coefficient_json(c));
    doc["degree"] = poly.degree();
    doc["coefficients"] = coeffs;
    return doc.dump();
}

std::string roots_json(const Polynomial& poly, const std::vector<double>& roots) {
    json doc = json::parse(to_json_text(poly));
    json list = json::array();
    for (double r : roots) list.push_back({{"x", r}, {"residual", residual_at(poly, r)}});
    doc["roots"] = list;
    return doc.dump();
}

std::string to_json_text(const Spectrum& spectrum) {
    json doc;
    json essential = json::array();
    for (const auto& iv : spectrum.essential) essential.push_back({iv.lo, iv.hi});
    doc["essential"] = essential;
    json point = json::array();
    for (const auto& pair : spectrum.point) {
        json entry;
        entry["lambda"] = pair.lambda;
        entry["branch"] = pair.branch == SpectralBranch::Tail ? "tail" : "zero";
        if (pair.b) entry["b"] = *pair.b;
        entry["residual"] = number_or_null(pair.residual);
        entry["embedded"] = pair.embedded;
        point.push_back(entry);
    }
    doc["point"] = point;
    return doc.dump();
}

std::string membership_json(double lambda, const CombMembership& membership) {
    json doc;
    doc["lambda"] = lambda;
    doc["in_spectrum"] = membership.in_spectrum;
    doc["by_criterion"] = membership.by_criterion;
    doc["by_intervals"] = membership.by_intervals;
    return doc.dump();
}

}  // namespace shiftlab
