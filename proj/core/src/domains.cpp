#include "bdom/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bdom {
namespace {

void require_size(std::span<const double> genes, std::size_t n, std::string_view domain) {
    if (genes.size() != n)
        throw ConfigError(std::string(domain) + " expects " + std::to_string(n) + " genes, got " +
                          std::to_string(genes.size()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Four peaks

double gaussian_bump(double x, double mu, double sigma) noexcept {
    const double z = x - mu;
    return std::exp(-(z * z) / (2.0 * sigma * sigma));
}

double four_peaks_fitness(double x) noexcept {
    double f = 0.0;
    for (const auto& p : kFourPeaks) f += p.amplitude * gaussian_bump(x, p.center, p.width);
    return f;
}

Evaluation FourPeaksDomain::evaluate(std::span<const double> genes, Rng&) const {
    require_size(genes, 1, "four_peaks");
    return {four_peaks_fitness(genes[0]), {genes[0]}};
}

std::vector<BinInterval> FourPeaksDomain::bins() const {
    std::vector<BinInterval> out;
    for (const auto& p : kFourPeaks) out.push_back({p.center - 5.0, p.center + 5.0});
    return out;
}

// ---------------------------------------------------------------------------
// ETF

double etf_heel_fitness(int index) {
    if (index < 1) throw ConfigError("claw index must be >= 1");
    double h = 1.0;
    for (int i = 1; i < index; ++i) h = 2.0 * (h + i);
    return h;
}

Claw etf_claw(int index, double scale) {
    if (index < 1) throw ConfigError("claw index must be >= 1");
    if (!(scale > 0.0)) throw ConfigError("ETF toe scale must be positive");
    // heel_i = (1, 1) + scale * sum_{j<i} (j, j)
    const double offset = 1.0 + scale * 0.5 * static_cast<double>(index) * static_cast<double>(index - 1);
    return {index, {offset, offset}, etf_heel_fitness(index), scale * static_cast<double>(index)};
}

Point2 Claw::tip(Toe toe) const noexcept {
    switch (toe) {
        case Toe::Vertical:
            return {heel.x, heel.y + length};
        case Toe::Horizontal:
            return {heel.x + length, heel.y};
        case Toe::Diagonal:
            break;
    }
    const double step = length / std::numbers::sqrt2;
    return {heel.x + step, heel.y + step};
}

double Claw::tip_fitness(Toe toe) const noexcept {
    return heel_fitness + (toe == Toe::Diagonal ? 2.0 : 1.0) * index;
}

EtfDomain::EtfDomain(double stretch, double toe_scale) : stretch_(stretch), toe_scale_(toe_scale) {
    if (!(stretch > 0.0) || !std::isfinite(stretch))
        throw ConfigError("ETF stretch s must be positive, got " + std::to_string(stretch));
    if (!(toe_scale > 0.0) || !std::isfinite(toe_scale))
        throw ConfigError("ETF toe scale must be positive, got " + std::to_string(toe_scale));
    for (int i = 1;; ++i) {
        auto claw = etf_claw(i, toe_scale);
        if (claw.heel.x + claw.length > kGeneMax) break;
        claws_.push_back(claw);
    }
}

double EtfDomain::default_domination_w() const { return 0.5 / stretch_; }

double EtfDomain::fitness_at(Point2 p) const noexcept {
    constexpr double half_width = kToeWidth / 2.0;
    double best = 0.0;
    for (const auto& claw : claws_) {
        // bounding box rejection
        if (p.x < claw.heel.x - half_width || p.y < claw.heel.y - half_width ||
            p.x > claw.heel.x + claw.length + half_width || p.y > claw.heel.y + claw.length + half_width)
            continue;
        if (std::hypot(p.x - claw.heel.x, p.y - claw.heel.y) <= half_width) best = std::max(best, claw.heel_fitness);
        for (Toe toe : {Toe::Vertical, Toe::Horizontal, Toe::Diagonal}) {
            const Point2 tip = claw.tip(toe);
            const double dx = tip.x - claw.heel.x;
            const double dy = tip.y - claw.heel.y;
            const double t = ((p.x - claw.heel.x) * dx + (p.y - claw.heel.y) * dy) / (dx * dx + dy * dy);
            if (t < 0.0 || t > 1.0) continue;
            const double off = std::hypot(p.x - (claw.heel.x + t * dx), p.y - (claw.heel.y + t * dy));
            if (off > half_width) continue;
            best = std::max(best, claw.heel_fitness + t * (claw.tip_fitness(toe) - claw.heel_fitness));
        }
    }
    return best;
}

Evaluation EtfDomain::evaluate(std::span<const double> genes, Rng&) const {
    require_size(genes, 2, "etf");
    return {fitness_at({genes[0], genes[1]}), {stretch_ * genes[0] + genes[1]}};
}

// ---------------------------------------------------------------------------
// Focused Ackley

double ackley_value(double x0, double x1, const AckleyParams& params, AckleyForm form) noexcept {
    const double rms = std::sqrt((x0 * x0 + x1 * x1) / 2.0);
    const double radial = params.a * std::exp(-params.b * rms);
    const double ripple = std::exp((std::cos(params.c * x0) + std::cos(params.c * x1)) / 2.0);
    if (form == AckleyForm::Peaked) return radial + ripple - params.a;
    return params.a + std::numbers::e - radial - ripple;
}

FocusedAckleyDomain::FocusedAckleyDomain(std::size_t dimensions, AckleyForm form, AckleyParams params)
    : dimensions_(dimensions), form_(form), params_(params) {
    if (dimensions < 2) throw ConfigError("focused Ackley needs D >= 2, got " + std::to_string(dimensions));
}

double FocusedAckleyDomain::default_domination_w() const {
    return 0.005 * std::pow(10.0, -(static_cast<double>(dimensions_) - 10.0) / 10.0);
}

bool FocusedAckleyDomain::in_region(std::span<const double> genes) const noexcept {
    if (std::abs(genes[0] - genes[1]) >= 2.0) return false;
    double rest = 0.0;
    for (std::size_t i = 2; i < genes.size(); ++i) rest += genes[i];
    return rest < static_cast<double>(dimensions_) / 2.0;
}

Evaluation FocusedAckleyDomain::evaluate(std::span<const double> genes, Rng& rng) const {
    require_size(genes, dimensions_, "focused_ackley");
    Behavior behavior(genes.begin(), genes.end());
    if (in_region(genes)) return {ackley_value(genes[0], genes[1], params_, form_), std::move(behavior)};
    std::uniform_real_distribution<double> noise(0.0, 1.0);
    return {noise(rng), std::move(behavior)};
}

// ---------------------------------------------------------------------------

AckleyForm parse_ackley_form(std::string_view name) {
    if (name == "standard") return AckleyForm::Standard;
    if (name == "peaked") return AckleyForm::Peaked;
    throw ConfigError("unknown Ackley form '" + std::string(name) + "' (expected standard or peaked)");
}

std::unique_ptr<Domain> make_domain(std::string_view name, const DomainOptions& options) {
    if (name == "four_peaks") return std::make_unique<FourPeaksDomain>();
    if (name == "etf") return std::make_unique<EtfDomain>(options.stretch.value_or(100.0), options.toe_scale.value_or(kEtfToeScale));
    if (name == "focused_ackley" || name == "ackley")
        return std::make_unique<FocusedAckleyDomain>(options.dimensions.value_or(10),
                                                     options.ackley_form.value_or(AckleyForm::Standard));
    throw ConfigError("unknown domain '" + std::string(name) + "' (expected four_peaks, etf or focused_ackley)");
}

}  // namespace bdom
