#include "cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "trapcorr/error.hpp"

namespace trapcorr::cli {

std::string to_string(Backend b) {
    switch (b) {
    case Backend::Exact:
        return "exact";
    case Backend::CircuitExact:
        return "circuit-exact";
    case Backend::CircuitSampled:
        return "circuit-sampled";
    }
    return "unknown";
}

PhysicalParams RunConfig::physical() const {
    return {v0, mass, box_length, n_cut};
}

MomentumBasis RunConfig::basis() const {
    if (backend == Backend::Exact)
        return build_basis(physical(), SymmetricCutoff{});
    return build_basis(physical(), QubitRegister{gamma});
}

EstimatorMode RunConfig::estimator() const {
    if (backend == Backend::CircuitSampled)
        return SampledEstimator{shots, seed};
    return ExactEstimator{};
}

TrotterSchedule RunConfig::schedule() const {
    return {static_cast<double>(trotter_steps_per_unit_time), 1};
}

void RunConfig::validate() const {
    (void)physical();
    if (backend != Backend::Exact) {
        if (gamma < 1 || gamma > 20)
            throw ArgumentError("config: circuit backends need gamma in [1, 20]");
        if (trotter_steps_per_unit_time < 1)
            throw ArgumentError("config: trotter_steps_per_unit_time must be "
                                "positive");
    }
    if (backend == Backend::CircuitSampled && shots < 1)
        throw ArgumentError("config: circuit-sampled backend needs shots >= 1");
    if (!(t0 > 0.0))
        throw ArgumentError("config: t0 must be positive");
    if (n_segments < 1)
        throw ArgumentError("config: n_segments must be >= 1");
    if (samples_per_segment < 20)
        throw ArgumentError("config: samples_per_segment must be >= 20");
}

namespace {

const std::set<std::string> kKeys = {
    "v0",     "mass",       "box_length",       "n_cut",
    "backend", "gamma",     "trotter_steps_per_unit_time",
    "shots",  "seed",       "t0",               "n_segments",
    "samples_per_segment",  "fit",              "initial_v0"};

template <class T> T get(const YAML::Node &node, const std::string &key) {
    try {
        return node[key].as<T>();
    } catch (const YAML::Exception &) {
        throw ArgumentError("config: bad value for '" + key + "'");
    }
}

} // namespace

RunConfig parse_config(const std::string &text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    if (!root.IsMap())
        throw ArgumentError("config: expected a mapping of key: value pairs");

    for (const auto &kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!kKeys.contains(key))
            throw ArgumentError("config: unknown key '" + key + "'");
        if (!kv.second.IsScalar())
            throw ArgumentError("config: '" + key + "' must be a scalar");
    }
    for (const char *required : {"v0", "mass", "box_length", "backend"})
        if (!root[required])
            throw ArgumentError(std::string("config: missing '") + required + "'");

    RunConfig c;
    c.v0 = get<double>(root, "v0");
    c.mass = get<double>(root, "mass");
    c.box_length = get<double>(root, "box_length");
    const auto backend = get<std::string>(root, "backend");
    if (backend == "exact")
        c.backend = Backend::Exact;
    else if (backend == "circuit-exact")
        c.backend = Backend::CircuitExact;
    else if (backend == "circuit-sampled")
        c.backend = Backend::CircuitSampled;
    else
        throw ArgumentError("config: unknown backend '" + backend + "'");

    if (c.backend == Backend::Exact && !root["n_cut"])
        throw ArgumentError("config: exact backend needs 'n_cut'");
    if (c.backend != Backend::Exact && !root["gamma"])
        throw ArgumentError("config: circuit backends need 'gamma'");
    if (c.backend == Backend::CircuitSampled && (!root["shots"] || !root["seed"]))
        throw ArgumentError("config: circuit-sampled backend needs 'shots' and "
                            "'seed'");

    if (root["n_cut"])
        c.n_cut = get<std::int64_t>(root, "n_cut");
    if (root["gamma"])
        c.gamma = get<int>(root, "gamma");
    if (root["trotter_steps_per_unit_time"])
        c.trotter_steps_per_unit_time = get<std::int64_t>(root, "trotter_steps_per_unit_time");
    if (root["shots"])
        c.shots = get<std::int64_t>(root, "shots");
    if (root["seed"])
        c.seed = get<std::uint64_t>(root, "seed");
    if (root["t0"])
        c.t0 = get<double>(root, "t0");
    if (root["n_segments"])
        c.n_segments = get<std::size_t>(root, "n_segments");
    if (root["samples_per_segment"])
        c.samples_per_segment = get<std::size_t>(root, "samples_per_segment");
    if (root["fit"])
        c.fit = get<bool>(root, "fit");
    if (root["initial_v0"])
        c.initial_v0 = get<double>(root, "initial_v0");
    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("config: cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace trapcorr::cli
