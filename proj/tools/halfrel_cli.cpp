// Command-line front end for the halfrel library.
//
// Exit codes: 0 success/verified, 1 checked-false, 2 usage error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halfrel/halfrel.hpp"

namespace {

using namespace halfrel;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

Tuple parse_tuple(const std::vector<std::string>& args) {
    std::vector<Int> e;
    for (const auto& a : args) e.push_back(parse_int(a));
    return Tuple(std::move(e));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + out_path + " for writing");
    f << text;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "jsonl") return OutputFormat::jsonl;
    if (s == "csv") return OutputFormat::csv;
    throw UsageError("unknown format " + s);
}

std::pair<long, long> parse_index_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = to_int64(parse_int(s));
        return {v, v};
    }
    return {static_cast<long>(to_int64(parse_int(s.substr(0, dots)))),
            static_cast<long>(to_int64(parse_int(s.substr(dots + 2))))};
}

std::string approx(const Rat& r) { return r.decimal(15); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified non-free parameters q for the group generated by A = [[1,1],[0,1]] and "
                 "B_q = [[1,0],[q,1]]"};
    app.require_subcommand(1);

    std::vector<std::string> tuple_args;
    std::string q_text, out_path, format_text = "jsonl", target_text, precision_text = "1e-12";
    long bound = 50, xbound = 1000, orbit = 0, nmax = 30, top = 10;
    long k = 0, s = 0, t = 0;
    int slot = 1;
    unsigned threads = 1;
    std::string variant, n_range = "2..5", digits, source = "quintic";
    std::string septic_n;
    std::vector<std::string> ranges;

    auto* phr = app.add_subcommand("phr", "Print the half-relation polynomial of a tuple");
    phr->add_option("tuple", tuple_args, "a1 ... al")->required();

    auto* check = app.add_subcommand("check", "Decide whether a tuple is a half-relation for q");
    check->add_option("tuple", tuple_args, "a1 ... al")->required();
    check->add_option("--q", q_text, "q as NUM/DEN or decimal")->required();

    auto* certify = app.add_subcommand("certify", "Emit a verified relator certificate as JSON");
    certify->add_option("tuple", tuple_args, "a1 ... al")->required();
    certify->add_option("--q", q_text, "q as NUM/DEN or decimal")->required();

    auto* onestep = app.add_subcommand("onestep", "1-step relation numbers (r+t)/(rst)");
    onestep->add_option("rst", tuple_args, "r s t");
    onestep->add_option("--q", q_text, "search for (r, s, t) giving this q");
    onestep->add_option("--bound", bound, "search bound on |r|, |s|, |t|");

    auto* solve = app.add_subcommand("solve5", "Rational length-5 half-relation numbers from the discriminant conic");
    solve->add_option("fixed", tuple_args, "the four fixed tuple entries, in tuple order")->required()->expected(4);
    solve->add_option("--slot", slot, "tuple position of the variable entry (1..5)");
    solve->add_option("--xbound", xbound, "exhaustive scan bound on |x|");
    solve->add_option("--orbit", orbit, "Pell-orbit steps per seed point");
    solve->add_option("--threads", threads, "worker threads");
    solve->add_option("--format", format_text, "jsonl or csv");
    solve->add_option("--target", target_text, "R or LO,HI");
    solve->add_option("--out", out_path, "output file (default stdout)");

    auto* fam = app.add_subcommand("families", "Explicit certified families");
    fam->add_option("variant", variant, "geom-block | geom-alt | pell | hpell | base")->required();
    fam->add_option("--k", k, "base k");
    fam->add_option("--s", s, "s");
    fam->add_option("--t", t, "t");
    fam->add_option("--n", n_range, "index range A..B (pell, hpell)");
    fam->add_option("--digits", digits, "fractional expansion 0.d1d2... (base)");

    auto* lim = app.add_subcommand("limits", "Limits of length-5 roots: a2 a3 a4 a5 | a3 a4 a5 | a4 a5");
    lim->add_option("args", tuple_args, "entries")->required();

    auto* septic = app.add_subcommand("septic", "Largest real root of P_HR^7(1,-1,1,-1,1,N,N; q)");
    septic->add_option("--N", septic_n, "N >= 1")->required();
    septic->add_option("--precision", precision_text, "interval width");

    auto* hunt = app.add_subcommand("hunt", "Verified non-free rationals nearest to a target");
    hunt->add_option("--target", target_text, "R or LO,HI")->required();
    hunt->add_option("--source", source, "quintic | pell | hpell");
    hunt->add_option("--range", ranges, "LO:HI for each fixed slot (4 times, tuple order)");
    hunt->add_option("--slot", slot, "tuple position of the variable entry (1..5)");
    hunt->add_option("--xbound", xbound, "exhaustive scan bound on |x|");
    hunt->add_option("--orbit", orbit, "Pell-orbit steps per seed point");
    hunt->add_option("--nmax", nmax, "largest family index (pell, hpell)");
    hunt->add_option("--top", top, "number of records to print");
    hunt->add_option("--threads", threads, "worker threads");
    hunt->add_option("--format", format_text, "jsonl or csv");
    hunt->add_option("--out", out_path, "output file (default stdout)");

    auto* recheck = app.add_subcommand("recheck", "Re-verify every record of a JSONL file from scratch");
    std::string in_path;
    recheck->add_option("file", in_path, "JSONL file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*phr) {
            auto p = phr_poly(parse_tuple(tuple_args));
            std::cout << p.str() << "\ncoeffs: [";
            for (std::size_t i = 0; i < p.coeffs().size(); ++i) std::cout << (i ? ", " : "") << p.coeffs()[i];
            std::cout << "]\n";
            return kOk;
        }
        if (*check) {
            bool yes = is_half_relation(parse_tuple(tuple_args), parse_rat(q_text));
            std::cout << (yes ? "true" : "false") << '\n';
            return yes ? kOk : kFalse;
        }
        if (*certify) {
            auto c = certify_half_relation(parse_tuple(tuple_args), parse_rat(q_text));
            std::cout << certificate_to_json(c).dump() << '\n';
            return kOk;
        }
        if (*onestep) {
            if (!q_text.empty()) {
                Rat q = parse_rat(q_text);
                auto found = onestep_search(q, bound);
                if (!found) {
                    std::cout << "none\n";
                    return kFalse;
                }
                std::cout << "r=" << found->r << " s=" << found->s << " t=" << found->t << '\n';
                std::cout << certificate_to_json(onestep_certificate(*found)).dump() << '\n';
                return kOk;
            }
            if (tuple_args.size() != 3) throw UsageError("onestep needs r s t or --q");
            OneStep x{parse_int(tuple_args[0]), parse_int(tuple_args[1]), parse_int(tuple_args[2])};
            std::cout << "q=" << onestep_q(x) << '\n';
            std::cout << certificate_to_json(onestep_certificate(x)).dump() << '\n';
            return kOk;
        }
        if (*solve) {
            std::array<Int, 4> fixed;
            for (std::size_t i = 0; i < 4; ++i) fixed[i] = parse_int(tuple_args[i]);
            Solve5Options opt{slot, xbound, orbit, threads, std::nullopt};
            if (!target_text.empty()) opt.target = Target::parse(target_text);
            emit(format_records(solve5(fixed, opt), parse_format(format_text)), out_path);
            return kOk;
        }
        if (*fam) {
            std::ostringstream os;
            auto line = [&os](const std::string& label, const FamilyMember& m) {
                auto c = certify_half_relation(m.tuple, m.q);
                os << label << "q=" << m.q << "  tuple=" << m.tuple.str()
                   << "  certificate=" << (c.valid() ? "verified" : "FAILED") << '\n';
            };
            if (variant == "geom-block") {
                line("", geom_block(k, s, t));
            } else if (variant == "geom-alt") {
                line("", geom_alternating(k, s, t));
            } else if (variant == "pell" || variant == "hpell") {
                auto [lo, hi] = parse_index_range(n_range);
                PellTable table;
                for (long n = lo; n <= hi; ++n) {
                    auto m = variant == "pell" ? pell_tuple(n, table) : hpell_tuple(n, table);
                    line("n=" + std::to_string(n) + "  ", m);
                }
            } else if (variant == "base") {
                if (k == 0) throw UsageError("base needs --k");
                os << base_k_parse(digits, static_cast<int>(k)) << '\n';
            } else {
                throw UsageError("unknown family " + variant);
            }
            std::cout << os.str();
            return kOk;
        }
        if (*lim) {
            std::vector<Int> a;
            for (const auto& x : tuple_args) a.push_back(parse_int(x));
            if (a.size() == 4) {
                for (auto br : {Branch::minus, Branch::plus}) {
                    auto iv = limit_a1(a[0], a[1], a[2], a[3], br);
                    std::cout << "lim_{a1} q" << (br == Branch::minus ? "-" : "+") << " in [" << iv.lo << ", "
                              << iv.hi << "] ~ " << approx(iv.midpoint()) << '\n';
                }
            } else if (a.size() == 3) {
                std::cout << "-(a3+a5)/(a3 a4 a5) = " << limit_a1_a2(a[0], a[1], a[2], Branch::minus) << '\n';
                std::cout << "lim_{a2} lim_{a1} q+ = " << limit_a1_a2(a[0], a[1], a[2], Branch::plus) << '\n';
            } else if (a.size() == 2) {
                std::cout << "-1/(a4 a5) = " << limit_a1_a2_a3(a[0], a[1]) << '\n';
            } else {
                throw UsageError("limits takes 4, 3 or 2 entries");
            }
            return kOk;
        }
        if (*septic) {
            Int n = parse_int(septic_n);
            auto iv = septic_experiment(n, parse_rat(precision_text));
            std::cout << "P7 = " << septic_poly(n).str() << '\n'
                      << "largest real root in [" << iv.lo << ", " << iv.hi << "]\n"
                      << "~ " << approx(iv.midpoint()) << "  |root - 3| ~ " << approx(abs(iv.midpoint() - Rat(3)))
                      << '\n';
            return kOk;
        }
        if (*hunt) {
            Target target = Target::parse(target_text);
            std::vector<FoundRecord> records;
            if (source == "quintic") {
                if (ranges.size() != 4) throw UsageError("hunt --source quintic needs --range four times");
                SearchJob job;
                for (std::size_t i = 0; i < 4; ++i) job.ranges[i] = IntRange::parse(ranges[i]);
                job.solve = {slot, xbound, orbit, threads, target};
                records = sweep(job);
            } else if (source == "pell" || source == "hpell") {
                records = pell_records(nmax, source == "hpell", target);
            } else {
                throw UsageError("unknown source " + source);
            }
            if (top < 0) throw UsageError("--top must be >= 0");
            auto best = nearest(std::move(records), target, static_cast<std::size_t>(top));
            emit(format_records(best, parse_format(format_text)), out_path);
            return kOk;
        }
        if (*recheck) {
            std::ifstream f(in_path);
            if (!f) throw UsageError("cannot open " + in_path);
            auto rep = recheck_jsonl(f);
            std::cout << rep.reproduced << "/" << rep.records << " records reproduced\n";
            for (const auto& msg : rep.failures) std::cout << msg << '\n';
            return rep.ok() ? kOk : kFalse;
        }
    } catch (const NotAHalfRelation& e) {
        std::cerr << "not a half-relation: " << e.what() << '\n';
        return kFalse;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
