#include "expcheck/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace expcheck {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string("DistributionSpec: ") + what +
                                    " must be a positive finite number");
    }
}

std::string format_param(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
    if (name == "exponential") return Family::exponential;
    if (name == "weibull") return Family::weibull;
    if (name == "gamma") return Family::gamma;
    if (name == "lognormal") return Family::lognormal;
    if (name == "uniform") return Family::uniform;
    if (name == "half-normal" || name == "half_normal") return Family::half_normal;
    return std::nullopt;
}

std::string family_name(Family family) {
    switch (family) {
        case Family::exponential: return "exponential";
        case Family::weibull: return "weibull";
        case Family::gamma: return "gamma";
        case Family::lognormal: return "lognormal";
        case Family::uniform: return "uniform";
        case Family::half_normal: return "half-normal";
    }
    return "unknown";
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require_positive(rate, "rate");
    return {Family::exponential, rate, 0.0};
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
    require_positive(shape, "shape");
    require_positive(scale, "scale");
    return {Family::weibull, shape, scale};
}

DistributionSpec DistributionSpec::gamma(double shape, double rate) {
    require_positive(shape, "shape");
    require_positive(rate, "rate");
    return {Family::gamma, shape, rate};
}

DistributionSpec DistributionSpec::lognormal(double log_mean, double log_sd) {
    require_positive(log_mean, "log-mean");
    require_positive(log_sd, "log-sd");
    return {Family::lognormal, log_mean, log_sd};
}

DistributionSpec DistributionSpec::uniform(double upper) {
    require_positive(upper, "upper");
    return {Family::uniform, upper, 0.0};
}

DistributionSpec DistributionSpec::half_normal(double sd) {
    require_positive(sd, "sd");
    return {Family::half_normal, sd, 0.0};
}

DistributionSpec DistributionSpec::from_params(Family family, double rate, double shape,
                                               double scale, double sigma, double upper) {
    switch (family) {
        case Family::exponential: return exponential(rate);
        case Family::weibull: return weibull(shape, scale);
        case Family::gamma: return gamma(shape, rate);
        case Family::lognormal: return lognormal(scale, sigma);
        case Family::uniform: return uniform(upper);
        case Family::half_normal: return half_normal(sigma);
    }
    throw std::invalid_argument("DistributionSpec: unknown family");
}

double DistributionSpec::draw(RandomStream& stream) const {
    switch (family) {
        case Family::exponential: return stream.exponential(p1);
        case Family::weibull: return stream.weibull(p1, p2);
        case Family::gamma: return stream.gamma(p1, p2);
        case Family::lognormal: return stream.lognormal(p1, p2);
        case Family::uniform: return stream.uniform_upper(p1);
        case Family::half_normal: return stream.half_normal(p1);
    }
    throw std::logic_error("DistributionSpec: unknown family");
}

std::string DistributionSpec::label() const {
    switch (family) {
        case Family::exponential: return "exponential(rate=" + format_param(p1) + ")";
        case Family::weibull:
            return "weibull(shape=" + format_param(p1) + ", scale=" + format_param(p2) + ")";
        case Family::gamma:
            return "gamma(shape=" + format_param(p1) + ", rate=" + format_param(p2) + ")";
        case Family::lognormal:
            return "lognormal(log-mean=" + format_param(p1) + ", log-sd=" + format_param(p2) + ")";
        case Family::uniform: return "uniform(upper=" + format_param(p1) + ")";
        case Family::half_normal: return "half-normal(sd=" + format_param(p1) + ")";
    }
    return "unknown";
}

SampleBatch sample(const DistributionSpec& spec, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample: m must be positive");
    RandomStream stream(seed, stream_task::sample, 0);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) values.push_back(spec.draw(stream));
    return {std::move(values), seed, spec};
}

}  // namespace expcheck
