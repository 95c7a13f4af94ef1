#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "halfrel/engine.hpp"
#include "halfrel/families.hpp"
#include "halfrel/number.hpp"
#include "halfrel/parallel.hpp"
#include "halfrel/quintic.hpp"
#include "halfrel/roots.hpp"

namespace halfrel {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON encoding. Integers that fit in 64 bits are JSON numbers; larger ones
// are decimal strings. Rationals are "num/den" strings.

inline ojson int_to_json(const Int& n) {
    if (fits_int64(n)) return to_int64(n);
    return n.get_str();
}

inline Int int_from_json(const ojson& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

inline ojson tuple_to_json(const Tuple& t) {
    ojson arr = ojson::array();
    for (const auto& x : t.entries()) arr.push_back(int_to_json(x));
    return arr;
}

inline Tuple tuple_from_json(const ojson& j) {
    if (!j.is_array()) throw ParseError("tuple must be an array");
    std::vector<Int> e;
    for (const auto& x : j) e.push_back(int_from_json(x));
    return Tuple(std::move(e));
}

inline ojson word_to_json(const Word& w) {
    ojson arr = ojson::array();
    for (const auto& s : w.syllables())
        arr.push_back(ojson::array({std::string(1, static_cast<char>(s.gen)), int_to_json(s.exp)}));
    return arr;
}

inline Word word_from_json(const ojson& j) {
    if (!j.is_array()) throw ParseError("relator must be an array");
    std::vector<Syllable> raw;
    for (const auto& s : j) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_string()) throw ParseError("bad syllable " + s.dump());
        auto g = s[0].get<std::string>();
        if (g != "a" && g != "b") throw ParseError("bad generator " + g);
        raw.push_back({g == "a" ? Gen::a : Gen::b, int_from_json(s[1])});
    }
    return Word::reduce(raw);
}

inline ojson certificate_to_json(const Certificate& c) {
    ojson j;
    j["kind"] = kind_name(c.kind);
    j["tuple"] = tuple_to_json(c.tuple);
    j["q"] = c.q.str();
    j["relator"] = word_to_json(c.relator);
    j["identity_verified"] = c.identity_verified;
    j["nontrivial_verified"] = c.nontrivial_verified;
    return j;
}

/// Parses a certificate and recomputes its verdicts; the stored flags are
/// ignored.
inline Certificate certificate_from_json(const ojson& j) {
    Certificate c;
    auto kind = j.at("kind").get<std::string>();
    if (kind == "half-relation") c.kind = CertificateKind::half_relation;
    else if (kind == "one-step") c.kind = CertificateKind::one_step;
    else throw ParseError("unknown certificate kind " + kind);
    c.tuple = tuple_from_json(j.at("tuple"));
    c.q = parse_rat(j.at("q").get<std::string>());
    c.relator = word_from_json(j.at("relator"));
    return reverify(std::move(c));
}

// ---------------------------------------------------------------------------
// Targets and records

/// Target point for distance reports: an exact rational (lo == hi) or a
/// narrow rational bracket around an irrational value.
struct Target {
    Interval bracket;

    static Target exact(const Rat& r) { return {{r, r}}; }
    static Target between(Rat a, Rat b) {
        if (b < a) std::swap(a, b);
        return {{std::move(a), std::move(b)}};
    }
    /// "R" or "LO,HI", each a rational or decimal string.
    static Target parse(std::string_view text) {
        if (auto comma = text.find(','); comma != std::string_view::npos)
            return between(parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1)));
        return exact(parse_rat(text));
    }

    /// Distance from q to the bracket (zero inside it).
    Rat distance(const Rat& q) const {
        if (q < bracket.lo) return bracket.lo - q;
        if (q > bracket.hi) return q - bracket.hi;
        return Rat(0);
    }
};

/// One verified non-free rational found by a search.
struct FoundRecord {
    Tuple tuple;
    Rat q;
    std::optional<Int> delta;
    bool identity_verified = false;
    bool nontrivial_verified = false;
    std::optional<Rat> distance;
};

inline constexpr int kRecordVersion = 1;
inline constexpr unsigned kDistancePlaces = 12;

inline ojson record_to_json(const FoundRecord& r) {
    ojson j;
    j["v"] = kRecordVersion;
    j["tuple"] = tuple_to_json(r.tuple);
    j["q"] = r.q.str();
    j["delta"] = r.delta ? int_to_json(*r.delta) : ojson(nullptr);
    j["identity_verified"] = r.identity_verified;
    j["nontrivial_verified"] = r.nontrivial_verified;
    j["distance"] = r.distance ? ojson(r.distance->decimal(kDistancePlaces)) : ojson(nullptr);
    return j;
}

enum class OutputFormat { jsonl, csv };

inline std::string format_records(const std::vector<FoundRecord>& records, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::jsonl) {
        for (const auto& r : records) os << record_to_json(r).dump() << '\n';
        return os.str();
    }
    os << "v,tuple,q,delta,identity_verified,nontrivial_verified,distance\n";
    for (const auto& r : records) {
        os << kRecordVersion << ',';
        for (std::size_t i = 0; i < r.tuple.size(); ++i) os << (i ? " " : "") << r.tuple[i];
        os << ',' << r.q << ',' << (r.delta ? r.delta->get_str() : "") << ','
           << (r.identity_verified ? "true" : "false") << ',' << (r.nontrivial_verified ? "true" : "false")
           << ',' << (r.distance ? r.distance->decimal(kDistancePlaces) : "") << '\n';
    }
    return os.str();
}

/// Builds a record from scratch; returns nothing unless the certificate
/// fully verifies.
inline std::optional<FoundRecord> make_record(const Tuple& t, const Rat& q, std::optional<Int> delta,
                                              const std::optional<Target>& target) {
    if (q.is_zero() || !is_half_relation(t, q)) return std::nullopt;
    auto cert = certify_half_relation(t, q);
    if (!cert.valid()) return std::nullopt;
    FoundRecord r{t, q, std::move(delta), cert.identity_verified, cert.nontrivial_verified, std::nullopt};
    if (target) r.distance = target->distance(q);
    return r;
}

struct RecheckReport {
    std::size_t records = 0;
    std::size_t reproduced = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && reproduced == records; }
};

/// Read-back check of a JSONL stream: every record is re-certified from its
/// tuple and q, and the recomputed verdicts must match the stored ones.
inline RecheckReport recheck_jsonl(std::istream& in) {
    RecheckReport rep;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ++rep.records;
        try {
            auto j = ojson::parse(line);
            if (j.at("v").get<int>() != kRecordVersion) throw ParseError("unsupported record version");
            Tuple t = tuple_from_json(j.at("tuple"));
            Rat q = parse_rat(j.at("q").get<std::string>());
            auto cert = certify_half_relation(t, q);
            bool same = cert.identity_verified == j.at("identity_verified").get<bool>() &&
                        cert.nontrivial_verified == j.at("nontrivial_verified").get<bool>();
            if (!j.at("delta").is_null() && t.size() == 5)
                same = same && int_from_json(j.at("delta")) == quintic_coeffs(t).discriminant();
            if (same && cert.valid()) ++rep.reproduced;
            else rep.failures.push_back("line " + std::to_string(lineno) + ": verdicts differ");
        } catch (const std::exception& e) {
            rep.failures.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// solve5 and sweeps

struct Solve5Options {
    int slot = 1;
    long x_abs_bound = 1000;
    long orbit_steps = 0;
    unsigned threads = 1;
    std::optional<Target> target;
};

/// For each nonzero x on the slot's discriminant conic, emits every nonzero
/// rational root of P_HR^5 with a verified certificate, ordered by x then q.
inline std::vector<FoundRecord> solve5(const std::array<Int, 4>& fixed, const Solve5Options& opt) {
    ConicSpec conic = conic_for_slot(fixed, opt.slot);
    auto points = conic_points(conic, opt.x_abs_bound, opt.orbit_steps, opt.threads);
    std::erase_if(points, [](const ConicPoint& p) { return sgn(p.x) == 0; });
    auto per_point = parallel_map(points.size(), opt.threads, [&](std::size_t i) {
        std::vector<FoundRecord> recs;
        Tuple t = conic.tuple_at(points[i].x);
        Int delta = quintic_coeffs(t).discriminant();
        for (const auto& q : rational_roots5(t))
            if (auto r = make_record(t, q, delta, opt.target)) recs.push_back(std::move(*r));
        return recs;
    });
    std::vector<FoundRecord> out;
    for (auto& v : per_point)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

struct IntRange {
    long lo = 1, hi = 1;

    /// "LO:HI" or a single value.
    static IntRange parse(std::string_view text) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            long v = to_int64(parse_int(text));
            return {v, v};
        }
        IntRange r{static_cast<long>(to_int64(parse_int(text.substr(0, colon)))),
                   static_cast<long>(to_int64(parse_int(text.substr(colon + 1))))};
        if (r.hi < r.lo) throw BadParams("empty range " + std::string(text));
        return r;
    }

    std::vector<long> values() const {
        std::vector<long> v;
        for (long x = lo; x <= hi; ++x)
            if (x != 0) v.push_back(x);
        return v;
    }
};

/// A sweep over the four fixed tuple entries; the remaining slot is solved
/// through its discriminant conic.
struct SearchJob {
    std::array<IntRange, 4> ranges;
    Solve5Options solve;
};

inline std::vector<std::array<Int, 4>> job_instances(const SearchJob& job) {
    std::vector<std::array<Int, 4>> out;
    auto v0 = job.ranges[0].values(), v1 = job.ranges[1].values(), v2 = job.ranges[2].values(),
         v3 = job.ranges[3].values();
    for (long a : v0)
        for (long b : v1)
            for (long c : v2)
                for (long d : v3) out.push_back({Int(a), Int(b), Int(c), Int(d)});
    return out;
}

/// All records of every instance of the job, in instance order. Instances
/// are distributed over the job's threads; each instance runs serially.
inline std::vector<FoundRecord> sweep(const SearchJob& job) {
    auto instances = job_instances(job);
    Solve5Options inner = job.solve;
    inner.threads = 1;
    auto results = parallel_map(instances.size(), job.solve.threads,
                                [&](std::size_t i) { return solve5(instances[i], inner); });
    std::vector<FoundRecord> out;
    for (auto& v : results)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

/// Records of the Pell (or half-companion Pell) family for n in [2, n_max].
inline std::vector<FoundRecord> pell_records(long n_max, bool half_companion, const std::optional<Target>& target) {
    std::vector<FoundRecord> out;
    PellTable table;
    for (long n = 2; n <= n_max; ++n) {
        auto m = half_companion ? hpell_tuple(n, table) : pell_tuple(n, table);
        if (auto r = make_record(m.tuple, m.q, std::nullopt, target)) out.push_back(std::move(*r));
    }
    return out;
}

inline bool tuple_less(const Tuple& a, const Tuple& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
}

/// Keeps the first record for each distinct q, orders by distance to the
/// target (then q, then tuple), and truncates to `top` entries.
inline std::vector<FoundRecord> nearest(std::vector<FoundRecord> records, const Target& target, std::size_t top) {
    for (auto& r : records) r.distance = target.distance(r.q);
    std::stable_sort(records.begin(), records.end(), [](const FoundRecord& a, const FoundRecord& b) {
        if (a.q != b.q) return a.q < b.q;
        return tuple_less(a.tuple, b.tuple);
    });
    records.erase(std::unique(records.begin(), records.end(),
                              [](const FoundRecord& a, const FoundRecord& b) { return a.q == b.q; }),
                  records.end());
    std::stable_sort(records.begin(), records.end(), [](const FoundRecord& a, const FoundRecord& b) {
        return *a.distance < *b.distance;
    });
    if (records.size() > top) records.resize(top);
    return records;
}

}  // namespace halfrel
