#include "triq/certify.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "triq/num_format.hpp"

namespace triq {

const char* conclusion_name(Conclusion c) {
    return c == Conclusion::Certified ? "certified" : "inconclusive";
}

namespace {

constexpr double kRadicandSlack = 1e-12;

Interval clamp_radicand(Interval r) {
    if (r.hi < -kRadicandSlack)
        throw std::domain_error("interval_F: radicand entirely below -1e-12");
    return {std::max(r.lo, 0.0), std::max(r.hi, 0.0)};
}

struct BoxRadicands {
    Interval r1, r2, r3, xy;
};

BoxRadicands box_radicands(const Box& b) {
    const Interval x2 = sqr(b.x), y2 = sqr(b.y);
    return {2.0 * x2 + 2.0 * y2 - Interval::point(1.0),
            2.0 + (2.0 * y2 - x2),
            2.0 + (2.0 * x2 - y2),
            b.x * b.y};
}

}  // namespace

Interval interval_F(const Box& b) {
    const auto r = box_radicands(b);
    const Interval s1 = sqrt_i(clamp_radicand(r.r1));
    const Interval s2 = sqrt_i(clamp_radicand(r.r2));
    const Interval s3 = sqrt_i(clamp_radicand(r.r3));
    const Interval sxy = sqrt_i(clamp_radicand(r.xy));
    const Interval sx = sqrt_i(clamp_radicand(b.x));
    const Interval sy = sqrt_i(clamp_radicand(b.y));
    return (1.0 - sxy) * s1 + (b.x - sy) * s2 + (b.y - sx) * s3;
}

namespace {

// Interval version of dF/dx; dF/dy is the same on the swapped box.
Interval interval_partial_x(const Box& b) {
    const auto r = box_radicands(b);
    const Interval s1 = sqrt_i(r.r1);
    const Interval s2 = sqrt_i(r.r2);
    const Interval s3 = sqrt_i(r.r3);
    const Interval sxy = sqrt_i(r.xy);
    const Interval sx = sqrt_i(b.x);
    const Interval sy = sqrt_i(b.y);
    return -(b.y * s1) / (2.0 * sxy) + ((1.0 - sxy) * (2.0 * b.x)) / s1  //
           + s2 - ((b.x - sy) * b.x) / s2                                //
           - s3 / (2.0 * sx) + ((b.y - sx) * (2.0 * b.x)) / s3;
}

bool grad_safe(const Box& b) {
    if (!(b.x.lo >= 1e-3 && b.y.lo >= 1e-3)) return false;
    const auto r = box_radicands(b);
    return r.r1.lo >= 1e-3 && r.r2.lo >= 1e-3 && r.r3.lo >= 1e-3;
}

}  // namespace

std::array<Interval, 2> interval_grad_F(const Box& b) {
    return {interval_partial_x(b), interval_partial_x({b.y, b.x})};
}

Interval enclosure_F(const Box& b, bool mean_value) {
    Interval natural = interval_F(b);
    if (!mean_value || !grad_safe(b)) return natural;
    const double mx = b.x.mid(), my = b.y.mid();
    const Interval fm = interval_F({Interval::point(mx), Interval::point(my)});
    const auto g = interval_grad_F(b);
    const Interval mv = fm + g[0] * (b.x - mx) + g[1] * (b.y - my);
    const double lo = std::max(natural.lo, mv.lo);
    const double hi = std::min(natural.hi, mv.hi);
    if (lo > hi) return natural;  // both enclose the true range, so this is rounding noise
    return {lo, hi};
}

namespace {

bool may_intersect_domain(const Box& b, double x_max) {
    return b.y.lo <= b.x.hi && b.x.lo <= x_max && b.x.hi + b.y.hi >= 1.0 && b.y.hi >= 0.0;
}

void bisect(const Box& b, Box& left, Box& right) {
    // Widest dimension; ties split x.
    if (b.x.width() >= b.y.width()) {
        const double m = b.x.mid();
        left = {{b.x.lo, m}, b.y};
        right = {{m, b.x.hi}, b.y};
    } else {
        const double m = b.y.mid();
        left = {b.x, {b.y.lo, m}};
        right = {b.x, {m, b.y.hi}};
    }
}

}  // namespace

Certificate certify_nonpositive(const CertifyOptions& opts) {
    if (!(opts.tau > 0.0)) throw std::invalid_argument("certify: tau must be positive");
    if (!(opts.min_width > 0.0)) throw std::invalid_argument("certify: min_width must be positive");

    Certificate cert;
    cert.domain = "M: 0 <= y <= x <= 1, x + y >= 1";
    if (opts.x_max < 1.0) cert.domain += ", x <= " + shortest(opts.x_max);
    cert.tau = opts.tau;

    std::deque<Box> queue;
    queue.push_back({{0.5, opts.x_max}, {0.0, 1.0}});
    bool exhausted = false;
    while (!queue.empty()) {
        if (cert.boxes_processed >= opts.max_boxes) {
            exhausted = true;
            break;
        }
        const Box b = queue.front();
        queue.pop_front();
        ++cert.boxes_processed;
        if (!may_intersect_domain(b, opts.x_max)) continue;
        const Interval f = enclosure_F(b, opts.mean_value);
        if (f.hi <= 0.0) continue;
        if (b.width() <= opts.min_width) {
            cert.residuals.push_back({b, f.hi});
            continue;
        }
        Box left{}, right{};
        bisect(b, left, right);
        queue.push_back(left);
        queue.push_back(right);
    }

    std::sort(cert.residuals.begin(), cert.residuals.end(),
              [](const ResidualBox& a, const ResidualBox& b) {
                  return std::tie(a.box.x.lo, a.box.y.lo, a.box.x.hi, a.box.y.hi) <
                         std::tie(b.box.x.lo, b.box.y.lo, b.box.x.hi, b.box.y.hi);
              });
    for (const auto& r : cert.residuals)
        cert.max_residual_width = std::max(cert.max_residual_width, r.box.width());

    const bool all_below_tau =
        std::all_of(cert.residuals.begin(), cert.residuals.end(),
                    [&](const ResidualBox& r) { return r.upper <= opts.tau; });
    cert.conclusion =
        (!exhausted && all_below_tau) ? Conclusion::Certified : Conclusion::Inconclusive;
    return cert;
}

namespace {

Box embed_edge(const std::string& edge, Interval t) {
    if (edge == "x=1") return {Interval::point(1.0), t};
    if (edge == "x=y") return {t, t};
    if (edge == "x+y=1") return {t, 1.0 - t};
    throw std::invalid_argument("unknown edge '" + edge + "'");
}

EdgeCertificate certify_edge(const EdgeProfile& profile, double tau, std::uint64_t max_boxes,
                             double min_width) {
    EdgeCertificate cert;
    cert.edge = profile.name;
    cert.tau = tau;

    std::deque<Interval> queue;
    queue.push_back({profile.lo, profile.hi});
    bool exhausted = false;
    while (!queue.empty()) {
        if (cert.boxes_processed >= max_boxes) {
            exhausted = true;
            break;
        }
        const Interval t = queue.front();
        queue.pop_front();
        ++cert.boxes_processed;
        const Interval f = enclosure_F(embed_edge(profile.name, t), true);
        if (f.hi <= 0.0) continue;
        if (t.width() <= min_width) {
            cert.residuals.push_back({t, f.hi});
            continue;
        }
        const double m = t.mid();
        queue.push_back({t.lo, m});
        queue.push_back({m, t.hi});
    }

    std::sort(cert.residuals.begin(), cert.residuals.end(),
              [](const ResidualInterval& a, const ResidualInterval& b) {
                  return std::tie(a.t.lo, a.t.hi) < std::tie(b.t.lo, b.t.hi);
              });
    for (const auto& r : cert.residuals)
        cert.max_residual_width = std::max(cert.max_residual_width, r.t.width());
    const bool all_below_tau =
        std::all_of(cert.residuals.begin(), cert.residuals.end(),
                    [&](const ResidualInterval& r) { return r.upper <= tau; });
    cert.conclusion =
        (!exhausted && all_below_tau) ? Conclusion::Certified : Conclusion::Inconclusive;
    return cert;
}

}  // namespace

std::array<EdgeCertificate, 3> certify_edges(double tau, std::uint64_t max_boxes,
                                             double min_width) {
    if (!(tau > 0.0)) throw std::invalid_argument("certify_edges: tau must be positive");
    const auto profiles = boundary_profiles();
    std::array<EdgeCertificate, 3> out;
    int k = 0;
    for (const auto& p : profiles) {
        if (p.vacuous) continue;
        out[k++] = certify_edge(p, tau, max_boxes, min_width);
    }
    return out;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c,
                                           const std::vector<EdgeCertificate>& edges) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["domain"] = c.domain;
    j["tau"] = shortest(c.tau);
    j["conclusion"] = conclusion_name(c.conclusion);
    j["boxes_processed"] = c.boxes_processed;
    j["residual_boxes"] = nlohmann::ordered_json::array();
    for (const auto& r : c.residuals) {
        nlohmann::ordered_json rb;
        rb["x"] = {shortest(r.box.x.lo), shortest(r.box.x.hi)};
        rb["y"] = {shortest(r.box.y.lo), shortest(r.box.y.hi)};
        rb["f_hi"] = shortest(r.upper);
        j["residual_boxes"].push_back(rb);
    }
    j["max_residual_width"] = shortest(c.max_residual_width);
    if (!edges.empty()) {
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : edges) {
            nlohmann::ordered_json je;
            je["edge"] = e.edge;
            je["tau"] = shortest(e.tau);
            je["conclusion"] = conclusion_name(e.conclusion);
            je["boxes_processed"] = e.boxes_processed;
            je["residual_intervals"] = nlohmann::ordered_json::array();
            for (const auto& r : e.residuals) {
                nlohmann::ordered_json rt;
                rt["t"] = {shortest(r.t.lo), shortest(r.t.hi)};
                rt["f_hi"] = shortest(r.upper);
                je["residual_intervals"].push_back(rt);
            }
            je["max_residual_width"] = shortest(e.max_residual_width);
            j["edges"].push_back(je);
        }
    }
    return j;
}

namespace {

Conclusion conclusion_from_name(const std::string& s) {
    if (s == "certified") return Conclusion::Certified;
    if (s == "inconclusive") return Conclusion::Inconclusive;
    throw std::invalid_argument("unknown conclusion '" + s + "'");
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.domain = j.at("domain").get<std::string>();
    c.tau = parse_double(j.at("tau").get<std::string>());
    c.conclusion = conclusion_from_name(j.at("conclusion").get<std::string>());
    c.boxes_processed = j.at("boxes_processed").get<std::uint64_t>();
    for (const auto& rb : j.at("residual_boxes")) {
        ResidualBox r{};
        r.box.x = Interval::make(parse_double(rb.at("x").at(0).get<std::string>()),
                                 parse_double(rb.at("x").at(1).get<std::string>()));
        r.box.y = Interval::make(parse_double(rb.at("y").at(0).get<std::string>()),
                                 parse_double(rb.at("y").at(1).get<std::string>()));
        r.upper = parse_double(rb.at("f_hi").get<std::string>());
        c.residuals.push_back(r);
    }
    c.max_residual_width = parse_double(j.at("max_residual_width").get<std::string>());
    return c;
}

std::vector<EdgeCertificate> edge_certificates_from_json(const nlohmann::json& j) {
    std::vector<EdgeCertificate> edges;
    if (!j.contains("edges")) return edges;
    for (const auto& je : j.at("edges")) {
        EdgeCertificate e;
        e.edge = je.at("edge").get<std::string>();
        e.tau = parse_double(je.at("tau").get<std::string>());
        e.conclusion = conclusion_from_name(je.at("conclusion").get<std::string>());
        e.boxes_processed = je.at("boxes_processed").get<std::uint64_t>();
        for (const auto& rt : je.at("residual_intervals")) {
            ResidualInterval r{};
            r.t = Interval::make(parse_double(rt.at("t").at(0).get<std::string>()),
                                 parse_double(rt.at("t").at(1).get<std::string>()));
            r.upper = parse_double(rt.at("f_hi").get<std::string>());
            e.residuals.push_back(r);
        }
        e.max_residual_width = parse_double(je.at("max_residual_width").get<std::string>());
        edges.push_back(e);
    }
    return edges;
}

void export_certificate(const Certificate& c, const std::vector<EdgeCertificate>& edges,
                        const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << certificate_to_json(c, edges).dump(2) << '\n';
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

VerifyResult verify_certificate(const nlohmann::json& j) {
    VerifyResult res;
    Certificate c;
    std::vector<EdgeCertificate> edges;
    try {
        c = certificate_from_json(j);
        edges = edge_certificates_from_json(j);
    } catch (const std::exception& e) {
        res.detail = std::string("malformed certificate: ") + e.what();
        return res;
    }
    if (c.conclusion == Conclusion::Certified) {
        for (const auto& r : c.residuals) {
            const Interval f = enclosure_F(r.box, true);
            if (!(f.hi <= c.tau)) {
                res.detail = "residual box [" + shortest(r.box.x.lo) + "," + shortest(r.box.x.hi) +
                             "]x[" + shortest(r.box.y.lo) + "," + shortest(r.box.y.hi) +
                             "] re-evaluates to upper bound " + shortest(f.hi) + " > tau";
                return res;
            }
        }
    }
    for (const auto& e : edges) {
        if (e.conclusion != Conclusion::Certified) continue;
        for (const auto& r : e.residuals) {
            Interval f{};
            try {
                f = enclosure_F(embed_edge(e.edge, r.t), true);
            } catch (const std::exception& ex) {
                res.detail = std::string("edge re-check failed: ") + ex.what();
                return res;
            }
            if (!(f.hi <= e.tau)) {
                res.detail = "edge '" + e.edge + "' residual [" + shortest(r.t.lo) + "," +
                             shortest(r.t.hi) + "] re-evaluates to upper bound " + shortest(f.hi) +
                             " > tau";
                return res;
            }
        }
    }
    res.sound = true;
    res.detail = "all residual enclosures re-verified";
    return res;
}

}  // namespace triq
