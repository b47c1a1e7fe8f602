#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "triq/devilfish.hpp"
#include "triq/interval.hpp"

namespace triq {

enum class Conclusion { Certified, Inconclusive };

const char* conclusion_name(Conclusion c);

struct ResidualBox {
    Box box;
    double upper;  // proven upper bound of F over box ∩ M
};

struct Certificate {
    std::string domain;
    double tau = 0.0;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::uint64_t boxes_processed = 0;
    std::vector<ResidualBox> residuals;
    double max_residual_width = 0.0;
};

struct ResidualInterval {
    Interval t;
    double upper;
};

struct EdgeCertificate {
    std::string edge;
    double tau = 0.0;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::uint64_t boxes_processed = 0;
    std::vector<ResidualInterval> residuals;
    double max_residual_width = 0.0;
};

// Natural interval extension of the devil-fish function over b. Radicand
// intervals whose lower endpoint dips below 0 are clamped at 0 (sound for
// the restriction to the natural domain); a radicand entirely below -1e-12
// raises std::domain_error.
Interval interval_F(const Box& b);

// Interval extension of the analytic gradient; only valid when x, y and all
// radicands are bounded away from 0 over the box.
std::array<Interval, 2> interval_grad_F(const Box& b);

// Natural extension, intersected with the mean-value form where the
// gradient extension is safe. The mean-value form is what keeps the box
// cluster around the smooth maximum at (1,1) finite.
Interval enclosure_F(const Box& b, bool mean_value = true);

struct CertifyOptions {
    double tau = 1e-6;
    std::uint64_t max_boxes = 10'000'000;
    double min_width = 1e-7;
    bool mean_value = true;
    // Optional restriction M ∩ {x <= x_max}, used by tests.
    double x_max = 1.0;
};

// Branch and bound over M proving F <= tau: prune boxes with enclosure
// upper bound <= 0, bisect the rest, report boxes reaching min_width as
// residuals. Certified iff every residual upper bound is <= tau.
// Deterministic FIFO processing; residuals canonically sorted.
Certificate certify_nonpositive(const CertifyOptions& opts = {});

// 1-D branch and bound on the three genuine edge profiles of M.
std::array<EdgeCertificate, 3> certify_edges(double tau = 1e-6,
                                             std::uint64_t max_boxes = 10'000'000,
                                             double min_width = 1e-7);

nlohmann::ordered_json certificate_to_json(const Certificate& c,
                                           const std::vector<EdgeCertificate>& edges = {});
Certificate certificate_from_json(const nlohmann::json& j);
std::vector<EdgeCertificate> edge_certificates_from_json(const nlohmann::json& j);

void export_certificate(const Certificate& c, const std::vector<EdgeCertificate>& edges,
                        const std::filesystem::path& path);

struct VerifyResult {
    bool sound = false;
    std::string detail;
};

// Re-checks every residual enclosure of a serialized certificate.
VerifyResult verify_certificate(const nlohmann::json& j);

}  // namespace triq
