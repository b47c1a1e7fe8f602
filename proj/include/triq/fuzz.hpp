#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "triq/triangle.hpp"

namespace triq {

// SplitMix64 (Steele/Lea/Flood constants), used counter-style so streams are
// reproducible across implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1].
    double next_unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

enum class Generator { UniformSides, AngleBased, NearDegenerate, NearEquilateral };

const char* generator_name(Generator g);
std::optional<Generator> generator_from_name(const std::string& name);

struct FuzzConfig {
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    Generator generator = Generator::UniformSides;
    double slack = 1e-12;
};

// Deterministic triangle stream for a given seed.
class TriangleStream {
  public:
    explicit TriangleStream(const FuzzConfig& config);

    Triangle next();
    std::uint64_t rejected() const { return rejected_; }

  private:
    Generator gen_;
    SplitMix64 rng_;
    std::uint64_t rejected_ = 0;
};

struct CheckStats {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    // Violation metric of the worst case seen (positive means a violation
    // before slack); the witness reproduces it.
    double worst = -std::numeric_limits<double>::infinity();
    double witness[3] = {0, 0, 0};
    // Smallest distance to the inequality's boundary seen.
    double min_margin = std::numeric_limits<double>::infinity();
};

struct FuzzReport {
    FuzzConfig config;
    std::map<std::string, CheckStats> checks;
    std::uint64_t violations = 0;
    // Sign monitor for the isosceles chain's squaring step.
    std::uint64_t presquare_negative = 0;
};

// Checks every inequality of the theorem and both corollaries on a
// generated stream, plus the two cross-path consistency identities.
// Violations are data, not errors.
FuzzReport run_fuzz(const FuzzConfig& config);

// Applies all checks to a single triangle, merging into the report.
void check_triangle(const Triangle& t, double slack, FuzzReport& report);

nlohmann::ordered_json report_to_json(const FuzzReport& r);

}  // namespace triq
