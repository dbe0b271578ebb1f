#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ratpoly/ehrhart/quasi_polynomial.hpp"
#include "ratpoly/ehrhart/verify.hpp"
#include "ratpoly/enumeration/classify.hpp"
#include "ratpoly/io/record.hpp"

namespace ratpoly::cli {

enum ExitCode : int { ok = 0, io_failure = 1, bad_input = 2, bound_violation = 3 };

using Int = std::int64_t;
using Json = nlohmann::ordered_json;

struct EnumerateOptions {
    Int r{2};
    Int k{0};
    bool zero_interior{false};
    std::string out;  // empty: stdout
    unsigned threads{0};
};

struct EhrhartOptions {
    std::string in;  // empty: stdin
    std::string tuples;
    std::string quasi;
};

struct VerifyOptions {
    std::string in;
    std::string report;  // empty: stdout
    bool zero_interior{false};
    unsigned threads{0};
};

struct PlotdataOptions {
    std::string in;
    Int b1{0};
    Int i1{0};
    std::string out;
};

struct NormalFormOptions {
    std::string in;
    std::string out;
};

namespace detail {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output file or stdout. Opening failures are I/O errors.
class Sink {
public:
    explicit Sink(const std::string& path) : path_(path == "-" ? std::string() : path) {
        if (!path_.empty()) {
            file_.open(path_, std::ios::binary | std::ios::trunc);
            if (!file_) throw IoFailure("cannot open " + path_ + " for writing");
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void close() {
        stream().flush();
        if (!stream()) throw IoFailure("write failed: " + (path_.empty() ? std::string("<stdout>") : path_));
        if (file_.is_open()) file_.close();
    }

private:
    std::string path_;
    std::ofstream file_;
};

inline std::vector<io::PolygonRecord> load(const std::string& path) {
    if (path.empty() || path == "-") return io::read_records(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    return io::read_records(in);
}

/// Runs `body`, mapping library errors onto exit codes and messages on `err`.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return io_failure;
    } catch (const ParseError& e) {
        err << "error: malformed input at " << e.what() << '\n';
        return bad_input;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
}

inline void require_denominator_two(const std::vector<io::PolygonRecord>& recs) {
    for (std::size_t i = 0; i < recs.size(); ++i)
        if (recs[i].polygon.denominator() != 2)
            throw DomainError("record " + std::to_string(i + 1) + " has denominator " +
                              std::to_string(recs[i].polygon.denominator()) + ", expected 2");
}

inline Json finding_json(const TupleFinding<Int>& f) {
    return Json{{"key", f.key.str()}, {"tuple", {f.tuple.b1, f.tuple.i1, f.tuple.b2, f.tuple.i2}}, {"detail", f.detail}};
}

}  // namespace detail

/// Sidecar manifest path for an output file.
inline std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

inline Json run_manifest(const EnumerateOptions& o, const ClassificationDataset<Int>& ds, double seconds) {
    Json params{{"r", o.zero_interior ? Int(2) : o.r}, {"k", o.zero_interior ? Json(nullptr) : Json(o.k)},
                {"zero_interior", o.zero_interior}, {"threads", resolve_threads(o.threads)}};
    Json strata = Json::array();
    std::size_t generated = 0, kept = 0;
    for (const auto& s : ds.strata) {
        strata.push_back({{"seed", s.seed}, {"r_size", s.r_size}, {"inf", s.inf}, {"fin", s.fin}, {"generated", s.generated}});
        generated += s.generated;
        kept += s.inf + s.fin;
    }
    return Json{{"command", "enumerate"},
                {"parameters", std::move(params)},
                {"seeds", ds.seeds.size()},
                {"strata", std::move(strata)},
                {"total", ds.size()},
                {"wall_clock_seconds", seconds},
                {"dedup", {{"generated", generated}, {"unique", kept}, {"duplicates", generated - kept}}}};
}

inline int cmd_enumerate(const EnumerateOptions& o, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        const auto start = std::chrono::steady_clock::now();
        ClassifyOptions<Int> copts;
        copts.threads = o.threads;
        const auto ds = o.zero_interior ? classify_zero_interior<Int>(copts) : classify<Int>(o.r, o.k, copts);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        detail::Sink sink(o.out);
        for (const auto& e : ds.polygons) sink.stream() << io::serialize(io::make_record(e.polygon)) << '\n';
        sink.close();

        const auto manifest = run_manifest(o, ds, seconds);
        err << manifest.dump() << '\n';
        if (!o.out.empty() && o.out != "-") {
            detail::Sink side(manifest_path(o.out));
            side.stream() << manifest.dump(2) << '\n';
            side.close();
        }
        return int(ok);
    });
}

inline int cmd_ehrhart(const EhrhartOptions& o, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        if (o.tuples.empty() && o.quasi.empty()) throw DomainError("nothing to do: give --tuples and/or --quasi");
        const auto recs = detail::load(o.in);
        std::optional<detail::Sink> tuples, quasi;
        if (!o.tuples.empty()) tuples.emplace(o.tuples);
        if (!o.quasi.empty()) quasi.emplace(o.quasi);
        for (const auto& rec : recs) {
            const auto key = canonical_form(rec.polygon).str();
            if (tuples) {
                const auto one = lattice_profile(rec.polygon, 1);
                const auto two = lattice_profile(rec.polygon, 2);
                tuples->stream() << key << ',' << one.boundary << ',' << one.interior << ',' << two.boundary << ','
                                 << two.interior << '\n';
            }
            if (quasi) {
                const auto qp = quasi_polynomial(rec.polygon);
                for (std::size_t i = 0; i < qp.components.size(); ++i) {
                    const auto& c = qp.components[i];
                    quasi->stream() << key << ',' << i << ',' << io::render(c[0]) << ',' << io::render(c[1]) << ','
                                    << io::render(c[2]) << '\n';
                }
            }
        }
        if (tuples) tuples->close();
        if (quasi) quasi->close();
        return int(ok);
    });
}

inline Json report_json(const VerificationReport<Int>& rep) {
    Json verdicts;
    for (auto c : {TupleCondition::a, TupleCondition::b, TupleCondition::c, TupleCondition::d, TupleCondition::exception})
        verdicts[to_string(c)] = rep.count(c);
    auto list = [](const std::vector<TupleFinding<Int>>& v) {
        Json a = Json::array();
        for (const auto& f : v) a.push_back(detail::finding_json(f));
        return a;
    };
    return Json{{"total", rep.total},
                {"verdicts", std::move(verdicts)},
                {"exceptions", list(rep.exceptions)},
                {"unconditional_violations", list(rep.unconditional_violations)},
                {"diagonal_violations", list(rep.diagonal_violations)},
                {"interior_violations", list(rep.interior_violations)}};
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        const auto recs = detail::load(o.in);
        detail::require_denominator_two(recs);
        std::vector<std::pair<CanonicalKey<Int>, RationalPolygon<Int>>> members;
        members.reserve(recs.size());
        for (const auto& r : recs) members.emplace_back(canonical_form(r.polygon), r.polygon);
        const auto rep = verify_entries(members, o.zero_interior, o.threads);

        detail::Sink sink(o.report);
        sink.stream() << report_json(rep).dump(2) << '\n';
        sink.close();
        err << "verified " << rep.total << " polygons: " << rep.exceptions.size() << " exceptions, "
            << rep.unconditional_violations.size() << " unconditional bound violations, "
            << rep.diagonal_violations.size() << " diagonal bound violations\n";
        return int(rep.unconditional_violations.empty() ? ok : bound_violation);
    });
}

inline int cmd_plotdata(const PlotdataOptions& o, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        if (o.b1 < 0 || o.i1 < 0) throw DomainError("--b1 and --i1 must be non-negative");
        const auto recs = detail::load(o.in);
        detail::require_denominator_two(recs);
        std::set<std::pair<std::int64_t, std::int64_t>> rows;
        for (const auto& r : recs) {
            const auto t = ehrhart_tuple(r.polygon);
            if (t.b1 == o.b1 && t.i1 == o.i1) rows.emplace(t.b2, t.i2);
        }
        detail::Sink sink(o.out);
        for (const auto& [b2, i2] : rows) sink.stream() << b2 << ' ' << i2 << '\n';
        sink.close();
        return int(ok);
    });
}

inline int cmd_normal_form(const NormalFormOptions& o, std::ostream& err = std::cerr) {
    return detail::guarded(err, [&] {
        const auto recs = detail::load(o.in);
        detail::Sink sink(o.out);
        for (const auto& r : recs) sink.stream() << canonical_form(r.polygon).str() << '\n';
        sink.close();
        return int(ok);
    });
}

}  // namespace ratpoly::cli
