#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {

/// Closed behavior interval [low, high] used by the bin-score measures.
struct BinInterval {
    double low = 0.0;
    double high = 0.0;

    [[nodiscard]] bool contains(double b) const noexcept { return b >= low && b <= high; }
};

/// A benchmark environment: one call yields both fitness and behavior.
class Domain {
public:
    virtual ~Domain() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::size_t genome_size() const = 0;
    [[nodiscard]] virtual std::size_t behavior_size() const = 0;
    /// May draw from `rng`; callers evaluate each genome exactly once.
    [[nodiscard]] virtual Evaluation evaluate(std::span<const double> genes, Rng& rng) const = 0;

    [[nodiscard]] virtual double default_mutation_sigma() const = 0;
    [[nodiscard]] virtual double default_domination_w() const = 0;
    /// Behavior bins for the total/current bin scores. Empty when the domain
    /// has no designated stepping-stone bins.
    [[nodiscard]] virtual std::vector<BinInterval> bins() const { return {}; }
};

// ---------------------------------------------------------------------------
// Four peaks

struct Peak {
    double amplitude;
    double center;
    double width;
};

inline constexpr std::array<Peak, 4> kFourPeaks{{
    {50.0, 10.0, 5.0},
    {150.0, 40.0, 3.0},
    {100.0, 70.0, 8.0},
    {200.0, 130.0, 5.0},
}};

/// exp(-(x - mu)^2 / (2 sigma^2))
double gaussian_bump(double x, double mu, double sigma) noexcept;

/// Sum of the four weighted Gaussians.
double four_peaks_fitness(double x) noexcept;

class FourPeaksDomain final : public Domain {
public:
    [[nodiscard]] std::string name() const override { return "four_peaks"; }
    [[nodiscard]] std::size_t genome_size() const override { return 1; }
    [[nodiscard]] std::size_t behavior_size() const override { return 1; }
    [[nodiscard]] Evaluation evaluate(std::span<const double> genes, Rng& rng) const override;
    [[nodiscard]] double default_mutation_sigma() const override { return 1.0; }
    [[nodiscard]] double default_domination_w() const override { return 16.0; }
    /// Width-10 bins centered on each peak.
    [[nodiscard]] std::vector<BinInterval> bins() const override;
};

// ---------------------------------------------------------------------------
// ETF claws

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

enum class Toe { Vertical, Horizontal, Diagonal };

/// Layout of one claw: a heel and three toes of length scale * i growing up,
/// right and along the diagonal. Heels advance by (length, length), so the
/// vertical and horizontal tips of claw i recombine into the heel of claw i + 1.
struct Claw {
    int index = 1;
    Point2 heel;
    double heel_fitness = 1.0;
    double length = 1.0;

    [[nodiscard]] Point2 tip(Toe toe) const noexcept;
    [[nodiscard]] double tip_fitness(Toe toe) const noexcept;
};

/// Default toe length per claw index.
inline constexpr double kEtfToeScale = 7.0;

/// Geometry of claw `index` (1-based) for toe length scale * index.
Claw etf_claw(int index, double scale = kEtfToeScale);

/// Heel fitness of claw `index`: h1 = 1, h(i+1) = 2 (h(i) + i).
double etf_heel_fitness(int index);

class EtfDomain final : public Domain {
public:
    static constexpr double kToeWidth = 0.2;

    explicit EtfDomain(double stretch = 100.0, double toe_scale = kEtfToeScale);

    [[nodiscard]] std::string name() const override { return "etf"; }
    [[nodiscard]] std::size_t genome_size() const override { return 2; }
    [[nodiscard]] std::size_t behavior_size() const override { return 1; }
    [[nodiscard]] Evaluation evaluate(std::span<const double> genes, Rng& rng) const override;
    [[nodiscard]] double default_mutation_sigma() const override { return 0.1; }
    /// 0.5 / s
    [[nodiscard]] double default_domination_w() const override;

    [[nodiscard]] double stretch() const noexcept { return stretch_; }
    [[nodiscard]] double toe_scale() const noexcept { return toe_scale_; }
    /// Claws that fit entirely inside [0, 150]^2.
    [[nodiscard]] std::span<const Claw> claws() const noexcept { return claws_; }
    /// Landscape value at a point; 0 away from every claw.
    [[nodiscard]] double fitness_at(Point2 p) const noexcept;

private:
    double stretch_;
    double toe_scale_;
    std::vector<Claw> claws_;
};

// ---------------------------------------------------------------------------
// Focused Ackley

struct AckleyParams {
    double a = 500.0;
    double b = 0.0005;
    double c = 3.14159265358979323846;
};

/// Which way the two-dimensional Ackley surface is turned for maximization.
enum class AckleyForm {
    /// a + e - a exp(-b rms) - exp(mean cos(c x)): the textbook Ackley value
    /// taken as fitness; local maxima on the odd lattice, growing outward.
    Standard,
    /// a exp(-b rms) + exp(mean cos(c x)) - a: global maximum e at the origin.
    Peaked,
};

double ackley_value(double x0, double x1, const AckleyParams& params = {},
                    AckleyForm form = AckleyForm::Standard) noexcept;

class FocusedAckleyDomain final : public Domain {
public:
    explicit FocusedAckleyDomain(std::size_t dimensions = 10, AckleyForm form = AckleyForm::Standard,
                                 AckleyParams params = {});

    [[nodiscard]] std::string name() const override { return "focused_ackley"; }
    [[nodiscard]] std::size_t genome_size() const override { return dimensions_; }
    [[nodiscard]] std::size_t behavior_size() const override { return dimensions_; }
    [[nodiscard]] Evaluation evaluate(std::span<const double> genes, Rng& rng) const override;
    [[nodiscard]] double default_mutation_sigma() const override { return 0.25; }
    /// 0.005 at D = 10, shrinking tenfold per ten extra dimensions.
    [[nodiscard]] double default_domination_w() const override;

    /// |x0 - x1| < 2 and the remaining coordinates sum below D / 2.
    [[nodiscard]] bool in_region(std::span<const double> genes) const noexcept;
    [[nodiscard]] AckleyForm form() const noexcept { return form_; }

private:
    std::size_t dimensions_;
    AckleyForm form_;
    AckleyParams params_;
};

struct DomainOptions {
    std::optional<double> stretch;          // ETF s
    std::optional<double> toe_scale;        // ETF toe length per claw index
    std::optional<std::size_t> dimensions;  // focused Ackley D
    std::optional<AckleyForm> ackley_form;
};

/// "four_peaks" | "etf" | "focused_ackley" (alias "ackley").
std::unique_ptr<Domain> make_domain(std::string_view name, const DomainOptions& options = {});

AckleyForm parse_ackley_form(std::string_view name);

}  // namespace bdom
