#include "arbor/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "arbor/arboricity.hpp"
#include "arbor/generators.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/registry.hpp"
#include "arbor/transforms.hpp"
#include "arbor/whitney.hpp"

namespace arbor {

namespace {

// Lazily computed invariants of one corpus graph, shared by its checks.
class EntryContext {
public:
    EntryContext(std::string name, Graph g, const RunOptions& options, std::uint64_t seed)
        : name_(std::move(name)), g_(std::move(g)), options_(options), seed_(seed) {}

    const std::string& name() const { return name_; }
    const Graph& graph() const { return g_; }
    const RunOptions& options() const { return options_; }
    std::uint64_t seed() const { return seed_; }

    const FVector& f() {
        if (!f_) f_ = f_vector(g_, options_.budget.clique_cap);
        return *f_;
    }
    const RecognitionResult& manifold() {
        if (!manifold_) manifold_ = manifold_dimension(g_, options_.budget);
        return *manifold_;
    }
    const RecognitionResult& sphere() {
        if (!sphere_) sphere_ = sphere_dimension(g_, options_.budget);
        return *sphere_;
    }
    const ArboricityResult& arbor() {
        if (!arbor_) {
            arbor_ = arboricity(g_);
            if (!is_valid_forest_partition(g_, arbor_->partition)) {
                throw std::logic_error("forest partition certificate failed validation");
            }
        }
        return *arbor_;
    }
    const DensityWitness& density() {
        if (!density_) density_ = arbor_ && arbor_->density ? *arbor_->density : max_density(g_);
        return *density_;
    }
    const WhitneyVerdict& whitney() {
        if (!whitney_) whitney_ = whitney_classify(g_, options_.budget);
        return *whitney_;
    }

    /// Certified manifold dimension; BudgetError when recognition gave up.
    std::optional<int> certified_dimension() {
        const auto& m = manifold();
        if (m.verdict == Verdict::Unknown) throw BudgetError("manifold recognition: " + m.reason);
        return m.yes() ? m.dimension : std::nullopt;
    }

private:
    std::string name_;
    Graph g_;
    const RunOptions& options_;
    std::uint64_t seed_;
    std::optional<FVector> f_;
    std::optional<RecognitionResult> manifold_;
    std::optional<RecognitionResult> sphere_;
    std::optional<ArboricityResult> arbor_;
    std::optional<DensityWitness> density_;
    std::optional<WhitneyVerdict> whitney_;
};

using Json = nlohmann::json;

struct Evaluation {
    Json actual;
    bool pass = false;
};

using Check = std::function<Evaluation(EntryContext&, const Json& expected)>;

Evaluation equal(Json actual, const Json& expected) {
    const bool pass = actual == expected;
    return {std::move(actual), pass};
}

Json ratio_text(const ExactRatio& r) { return to_string(r); }

ExactRatio parse_ratio(const Json& j) {
    if (j.is_number_integer()) return ExactRatio(j.get<std::int64_t>());
    if (j.is_string()) return ExactRatio(j.get<std::string>());
    return ratio_from_json(j);
}

bool all_zero(const std::vector<ExactRatio>& v) {
    return std::all_of(v.begin(), v.end(), [](const ExactRatio& r) { return r == 0; });
}

Json ratio_list(const std::vector<ExactRatio>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

Json dimension_json(const RecognitionResult& r) {
    if (r.verdict == Verdict::Unknown) throw BudgetError("recognition: " + r.reason);
    return r.yes() ? Json(*r.dimension) : Json(nullptr);
}

std::string trend_of(const std::vector<ExactRatio>& phis) {
    auto pairwise = [&](auto pred) {
        for (std::size_t i = 1; i < phis.size(); ++i) {
            if (!pred(phis[i - 1], phis[i])) return false;
        }
        return true;
    };
    const ExactRatio three(3);
    if (pairwise([&](const auto& a, const auto& b) { return a < b && b < three; })) return "increase";
    if (std::all_of(phis.begin(), phis.end(), [&](const auto& p) { return p == three; })) return "fixed";
    if (pairwise([&](const auto& a, const auto& b) { return a > b && b > three; })) return "decrease";
    return "irregular";
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table{
        {"vertices", [](EntryContext& c, const Json& e) { return equal(c.graph().vertex_count(), e); }},
        {"edges", [](EntryContext& c, const Json& e) { return equal(c.graph().edge_count(), e); }},
        {"f_vector", [](EntryContext& c, const Json& e) { return equal(c.f().counts, e); }},
        {"euler", [](EntryContext& c, const Json& e) { return equal(c.f().euler_characteristic(), e); }},
        {"manifold_dimension", [](EntryContext& c, const Json& e) { return equal(dimension_json(c.manifold()), e); }},
        {"sphere_dimension", [](EntryContext& c, const Json& e) { return equal(dimension_json(c.sphere()), e); }},
        {"contractible",
         [](EntryContext& c, const Json& e) {
             auto r = is_contractible(c.graph(), c.options().budget);
             if (r.verdict == Verdict::Unknown) throw BudgetError("contractibility: " + r.reason);
             return equal(r.yes(), e);
         }},
        {"phi", [](EntryContext& c, const Json& e) { return equal(ratio_text(phi(c.graph())), e); }},
        {"e_over_v",
         [](EntryContext& c, const Json& e) {
             return equal(ratio_text(ExactRatio(c.graph().edge_count(), c.graph().vertex_count())), e);
         }},
        {"surface_phi",
         [](EntryContext& c, const Json& e) {
             auto d = c.certified_dimension();
             if (d != 2) return Evaluation{Json{{"dimension", d ? Json(*d) : Json(nullptr)}}, false};
             const ExactRatio from_f = surface_phi(c.f().euler_characteristic(), c.f()[2]);
             return equal(from_f == phi(c.graph()), e);
         }},
        {"max_density", [](EntryContext& c, const Json& e) { return equal(ratio_text(c.density().value), e); }},
        {"max_density_gt",
         [](EntryContext& c, const Json& e) {
             const auto& v = c.density().value;
             return Evaluation{ratio_text(v), v > parse_ratio(e)};
         }},
        {"arboricity", [](EntryContext& c, const Json& e) { return equal(c.arbor().k, e); }},
        {"arboricity_in",
         [](EntryContext& c, const Json& e) {
             const int k = c.arbor().k;
             const bool pass = e.is_array() && std::find(e.begin(), e.end(), Json(k)) != e.end();
             return Evaluation{k, pass};
         }},
        {"arboricity_at_least",
         [](EntryContext& c, const Json& e) {
             const auto bound = ceil(c.density().value);
             return Evaluation{Json(bound.convert_to<std::int64_t>()), bound >= e.get<std::int64_t>()};
         }},
        {"manifold_lower_bound",
         [](EntryContext& c, const Json& e) {
             auto d = c.certified_dimension();
             if (!d) return Evaluation{Json{{"dimension", nullptr}}, false};
             const int k = c.arbor().k;
             return Evaluation{Json{{"arboricity", k}, {"dimension", *d}}, (k >= *d + 1) == e.get<bool>()};
         }},
        {"gauss_bonnet",
         [](EntryContext& c, const Json& e) {
             const ExactRatio sum = gauss_bonnet_sum(c.graph(), c.options().budget.clique_cap);
             const auto general = gauss_bonnet_general_check(c.graph(), c.options().budget.clique_cap);
             const bool ok = sum == c.f().euler_characteristic() && all_zero(general);
             return Evaluation{Json{{"curvature_sum", to_string(sum)}, {"general_residuals", ratio_list(general)}},
                               ok == e.get<bool>()};
         }},
        {"dehn_sommerville",
         [](EntryContext& c, const Json& e) {
             auto d = c.certified_dimension();
             if (!d || *d < 1 || *d > 4) return Evaluation{Json{{"dimension", d ? Json(*d) : Json(nullptr)}}, false};
             const auto residuals = dehn_sommerville_check(c.graph(), *d, c.options().budget.clique_cap);
             return Evaluation{ratio_list(residuals), all_zero(residuals) == e.get<bool>()};
         }},
        {"operator_check",
         [](EntryContext& c, const Json& e) {
             const auto r = operator_check(c.graph(), c.options().budget.clique_cap);
             return Evaluation{Json(std::vector<std::int64_t>(r.data(), r.data() + r.size())),
                               r.isZero() == e.get<bool>()};
         }},
        {"laplacian_trace",
         [](EntryContext& c, const Json& e) {
             const auto r = laplacian_trace_check(c.graph(), c.options().budget);
             const bool zero = r.vertices == 0 && r.edges == 0 && r.faces == 0;
             return Evaluation{Json{{"trace", r.trace}}, zero == e.get<bool>()};
         }},
        {"phi_trend",
         [](EntryContext& c, const Json& e) {
             std::vector<ExactRatio> phis;
             Graph g = c.graph();
             for (int step = 0; step < 3; ++step) {
                 auto [before, after] = phi_refinement_trend(g, c.options().budget);
                 if (step == 0) phis.push_back(before);
                 phis.push_back(after);
                 if (step < 2) g = barycentric_refinement(g, c.options().budget.clique_cap);
             }
             const std::string trend = trend_of(phis);
             return Evaluation{Json{{"trend", trend}, {"phi", ratio_list(phis)}}, Json(trend) == e};
         }},
        {"min_area",
         [](EntryContext& c, const Json& e) {
             const std::int64_t faces = c.f()[2];
             const std::int64_t bound = min_area_bound(c.f().euler_characteristic());
             return Evaluation{Json{{"faces", faces}, {"bound", bound}}, (faces >= bound) == e.get<bool>()};
         }},
        {"min_area_attained",
         [](EntryContext& c, const Json& e) {
             const std::int64_t faces = c.f()[2];
             const std::int64_t bound = min_area_bound(c.f().euler_characteristic());
             return Evaluation{Json{{"faces", faces}, {"bound", bound}}, (faces == bound) == e.get<bool>()};
         }},
        {"tetrahedral_free", [](EntryContext& c, const Json& e) { return equal(c.f().dimension() < 3, e); }},
        {"planar", [](EntryContext& c, const Json& e) { return equal(is_planar(c.graph()), e); }},
        {"maximal_planar", [](EntryContext& c, const Json& e) { return equal(is_maximal_planar(c.graph()), e); }},
        {"four_connected", [](EntryContext& c, const Json& e) { return equal(c.whitney().is_4_connected, e); }},
        {"whitney_class",
         [](EntryContext& c, const Json& e) { return equal(to_string(c.whitney().classification), e); }},
        {"whitney_consistent",
         [](EntryContext& c, const Json& e) {
             const auto& w = c.whitney();
             if (!w.consistency) throw BudgetError("whitney: sphere recognition indeterminate");
             return equal(*w.consistency, e);
         }},
        {"three_manifold_tetrahedra",
         [](EntryContext& c, const Json& e) {
             const auto& f = c.f();
             return Evaluation{Json{{"tetrahedra", f[3]}, {"edges_minus_vertices", f[1] - f[0]}},
                               (f[3] == f[1] - f[0]) == e.get<bool>()};
         }},
        {"join_f_polynomial",
         [](EntryContext& c, const Json& e) {
             const auto cap = c.options().budget.clique_cap;
             const FPolynomial f = f_polynomial(c.graph(), cap);
             const FPolynomial joined = f_polynomial(zykov_join(c.graph(), c.graph()), cap);
             return Evaluation{Json(joined.coefficients), (joined == f * f) == e.get<bool>()};
         }},
        {"inflate_exceeds",
         [](EntryContext& c, const Json& e) {
             const int target = e.get<int>();
             InflationOptions opts;
             opts.validate_every = 1;
             opts.budget = c.options().budget;
             const auto r = inflate_arboricity(c.graph(), target, opts);
             bool deltas = true;
             for (const auto& s : r.steps) {
                 if (s.phase == 2) deltas = deltas && s.vertex_delta == 1 && s.edge_delta == s.link_size + 1;
             }
             const auto density = max_density(r.graph).value;
             return Evaluation{Json{{"steps", r.steps.size()},
                                    {"max_density", to_string(density)},
                                    {"phase2_deltas_exact", deltas}},
                               density > target && deltas};
         }},
        {"conjecture",
         [](EntryContext& c, const Json& e) {
             ConjectureReport r;
             if (c.graph().vertex_count() <= kExhaustiveGuard) {
                 r = phi_maximality_check(c.graph(), c.name());
             } else {
                 r = phi_maximality_check(c.graph(), SampledSearch{c.options().conjecture_samples, c.seed(), 1},
                                          c.name());
             }
             const Json report = to_json(r);
             return Evaluation{report, report.at("verdict") == e};
         }},
    };
    return table;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : checks()) out.push_back(name);
    return out;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Indeterminate: return "indeterminate";
    }
    return "fail";
}

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array()) {
        throw InputError("corpus must be an object with an \"entries\" array");
    }
    std::vector<CorpusEntry> entries;
    std::set<std::string> names;
    for (const auto& j : doc.at("entries")) {
        CorpusEntry e;
        if (!j.is_object() || !j.contains("name") || !j.at("name").is_string()) {
            throw InputError("corpus entry without a name");
        }
        e.name = j.at("name").get<std::string>();
        auto where = [&](const std::string& msg) { return InputError("corpus entry '" + e.name + "': " + msg); };
        if (!names.insert(e.name).second) throw where("duplicate name");
        if (j.contains("anchors")) e.anchors = j.at("anchors").get<std::vector<std::string>>();
        if (!j.contains("generator") || !j.at("generator").is_object()) throw where("missing generator");
        e.generator = j.at("generator");
        const auto families = family_names();
        const auto family = e.generator.value("family", std::string());
        if (!std::binary_search(families.begin(), families.end(), family)) {
            throw where("unknown family '" + family + "'");
        }
        if (!j.contains("expected") || !j.at("expected").is_object()) throw where("missing expected map");
        for (const auto& [key, spec] : j.at("expected").items()) {
            if (!checks().contains(key)) throw where("unknown check '" + key + "'");
            if (!spec.is_object() || !spec.contains("value")) throw where("check '" + key + "' needs a value");
            e.expected.push_back({key, spec.at("value"), spec.value("basis", std::string("derived"))});
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

int VerificationReport::exit_code() const {
    if (totals.fail > 0) return 1;
    if (totals.indeterminate > 0) return 2;
    return 0;
}

std::uint64_t entry_seed(std::uint64_t root, const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : name) h = (h ^ ch) * 0x100000001b3ULL;
    return splitmix(root ^ splitmix(h));
}

EntryReport run_entry(const CorpusEntry& entry, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    EntryReport report{entry.name, entry.anchors, Status::Pass, {}, {}, 0.0};
    try {
        EntryContext ctx(entry.name, generate_from_spec(entry.generator), options, entry_seed(options.seed, entry.name));
        for (const auto& exp : entry.expected) {
            CheckOutcome out{exp, nullptr, Status::Fail};
            try {
                auto ev = checks().at(exp.key)(ctx, exp.value);
                out.actual = std::move(ev.actual);
                out.status = ev.pass ? Status::Pass : Status::Fail;
            } catch (const BudgetError& e) {
                out.actual = Json{{"error", e.what()}};
                out.status = Status::Indeterminate;
            } catch (const std::exception& e) {
                out.actual = Json{{"error", e.what()}};
            }
            report.checks.push_back(std::move(out));
        }
    } catch (const std::exception& e) {
        report.error = e.what();
        report.status = Status::Fail;
    }
    for (const auto& c : report.checks) {
        if (c.status == Status::Fail) report.status = Status::Fail;
        if (c.status == Status::Indeterminate && report.status == Status::Pass) report.status = Status::Indeterminate;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& options) {
    VerificationReport report;
    report.entries.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) report.entries[i] = run_entry(entries[i], options);
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(entries.size())));
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    pool.clear();

    std::sort(report.entries.begin(), report.entries.end(),
              [](const EntryReport& a, const EntryReport& b) { return a.name < b.name; });
    std::map<std::string, AnchorCounts> anchors;
    auto bump = [](AnchorCounts& c, Status s) {
        if (s == Status::Pass) ++c.pass;
        if (s == Status::Fail) ++c.fail;
        if (s == Status::Indeterminate) ++c.indeterminate;
    };
    for (const auto& e : report.entries) {
        bump(report.totals, e.status);
        for (const auto& a : e.anchors) bump(anchors[a], e.status);
    }
    report.anchors.assign(anchors.begin(), anchors.end());
    return report;
}

nlohmann::json to_json(const EntryReport& r, bool with_timing) {
    Json checks_json = Json::array();
    for (const auto& c : r.checks) {
        checks_json.push_back({{"check", c.expectation.key},
                               {"basis", c.expectation.basis},
                               {"expected", c.expectation.value},
                               {"actual", c.actual},
                               {"status", to_string(c.status)}});
    }
    Json j{{"entry", r.name}, {"anchors", r.anchors}, {"status", to_string(r.status)}, {"checks", checks_json}};
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

nlohmann::json summary_json(const VerificationReport& r) {
    auto counts = [](const AnchorCounts& c) {
        return Json{{"pass", c.pass}, {"fail", c.fail}, {"indeterminate", c.indeterminate}};
    };
    Json anchors = Json::object();
    for (const auto& [name, c] : r.anchors) anchors[name] = counts(c);
    return Json{{"summary", counts(r.totals)}, {"anchors", anchors}, {"exit_code", r.exit_code()}};
}

}  // namespace arbor
