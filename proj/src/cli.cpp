#include "pptseq/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pptseq/autocorr.hpp"
#include "pptseq/baudhayana.hpp"
#include "pptseq/published.hpp"
#include "pptseq/randomness.hpp"
#include "pptseq/residue.hpp"

namespace pptseq::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

/// Writes to a file when a path is given, to `fallback` otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path) {
        if (path.empty()) {
            os_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
        os_ = file_.get();
    }

    std::ostream& stream() { return *os_; }

    void close() {
        os_->flush();
        if (!*os_) throw IoError("write failed for '" + (path_.empty() ? "stdout" : path_) + "'");
        if (file_) file_->close();
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

/// JSON numbers carrying the same six significant digits as the CSV output.
double rounded(double v) { return std::stod(format_real(v)); }

void check_count(std::size_t count) {
    if (count == 0) throw InvalidArgument("--count must be at least 1");
    if (count > kMaxCount) {
        throw OverflowError("--count " + std::to_string(count) +
                            " would push c past the 64-bit range");
    }
}

ClassSequence stream_classes(std::size_t count, u64 p) {
    check_count(count);
    require_odd_prime(p);
    ClassSequence cs;
    cs.modulus = p;
    cs.labels.reserve(count);
    OrderedGenerator gen;
    for (std::size_t i = 0; i < count; ++i) cs.labels.push_back(classify(gen.next().a, p));
    return cs;
}

/// The class sequence a command works on: either parsed from --from-string
/// or classified from the first --count triples.
ClassSequence source_classes(const RunConfig& cfg) {
    if (!cfg.from_string.empty()) return ClassSequence::from_letters(cfg.from_string, cfg.modulus);
    return stream_classes(cfg.count, cfg.modulus);
}

std::vector<ClassLabel> all_labels(u64 p) {
    std::vector<ClassLabel> out;
    for (std::uint32_t r = 0; r < p; ++r) out.push_back(ClassLabel{r});
    return out;
}

std::string join(const std::vector<u64>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

void write_autocorr_rows(std::ostream& os, Format fmt, const AutocorrResult& r) {
    if (fmt == Format::csv) os << "k,C\n";
    for (std::size_t k = 0; k < r.values.size(); ++k) {
        const double v = to_double(r.values[k]);
        if (fmt == Format::csv) {
            os << k << ',' << format_real(v) << '\n';
        } else {
            os << json{{"k", k}, {"C", rounded(v)}}.dump() << '\n';
        }
    }
}

std::string summary_line(const AutocorrSummary& s) {
    return "peak=" + format_real(s.peak) + ",offpeak_mean=" + format_real(s.offpeak_mean) +
           ",expected=" + format_real(s.expected) + ",deviation=" + format_real(s.deviation);
}

json summary_json(u64 p, const ClassLabel& label, const AutocorrSummary& s) {
    return json{{"summary", true},
                {"modulus", p},
                {"class", label.name(p)},
                {"peak", rounded(s.peak)},
                {"offpeak_mean", rounded(s.offpeak_mean)},
                {"expected", rounded(s.expected)},
                {"deviation", rounded(s.deviation)}};
}

struct ClassAutocorr {
    ClassLabel label;
    GapSequence gaps;
    AutocorrResult result;
    AutocorrSummary summary;
};

ClassAutocorr autocorr_for_class(const ClassSequence& cs, ClassLabel label, std::size_t k_max,
                                 BoundaryMode mode) {
    ClassAutocorr out{label, gap_sequence(cs, label), {}, {}};
    if (out.gaps.gaps.empty()) {
        throw InvalidArgument("class " + label.name(cs.modulus) +
                              " occurs fewer than twice; no gaps to correlate");
    }
    if (k_max == 0) throw InvalidArgument("--max-lag must be at least 1");
    out.result = compute(out.gaps.gaps, k_max, mode);
    out.summary = summarize(out.result, expected_offpeak(cs.modulus, label));
    return out;
}

std::vector<std::size_t> default_lengths() {
    return {published::kTableLengths.begin(), published::kTableLengths.end()};
}

std::vector<u64> default_primes() {
    return {published::kTablePrimes.begin(), published::kTablePrimes.end()};
}

void write_table_matrix(std::ostream& os, const DivisibilityTable& t) {
    os << "length";
    for (u64 p : t.primes) os << ',' << p;
    os << '\n';
    for (std::size_t i = 0; i < t.lengths.size(); ++i) {
        os << t.lengths[i];
        for (std::size_t c : t.counts[i]) os << ',' << c;
        os << '\n';
    }
}

void write_table_compare(std::ostream& os, const DivisibilityTable& t) {
    os << "length,prime,ours,published,rel_error,flag\n";
    for (std::size_t i = 0; i < t.lengths.size(); ++i) {
        for (std::size_t j = 0; j < t.primes.size(); ++j) {
            const std::size_t ours = t.counts[i][j];
            const std::size_t theirs = published::table_count(t.lengths[i], t.primes[j]);
            os << t.lengths[i] << ',' << t.primes[j] << ',' << ours << ',';
            if (theirs == 0) {
                os << ",,\n";
                continue;
            }
            const double rel = (static_cast<double>(ours) - static_cast<double>(theirs)) /
                               static_cast<double>(theirs);
            os << theirs << ',' << format_real(rel) << ','
               << (published::is_suspect_cell(t.lengths[i], t.primes[j]) ? "paper-suspect" : "")
               << '\n';
        }
    }
}

struct TheoremRow {
    u64 prime;
    GridCensus census;
    Rational probability;
    bool match;
};

std::vector<TheoremRow> theorem_rows(const std::vector<u64>& primes) {
    std::vector<TheoremRow> rows;
    for (u64 p : primes) {
        const GridCensus g = grid_census(p);
        const Rational prob = theorem_probability(p);
        const bool match = g.divisible == 2 * (p - 1) && g.qualifying == p * p - 1 &&
                           g.ratio() == prob;
        rows.push_back({p, g, prob, match});
    }
    return rows;
}

void write_theorem_rows(std::ostream& os, const std::vector<TheoremRow>& rows) {
    os << "prime,divisible,qualifying,ratio,probability,match\n";
    for (const auto& r : rows) {
        os << r.prime << ',' << r.census.divisible << ',' << r.census.qualifying << ','
           << to_string(r.census.ratio()) << ',' << to_string(r.probability) << ','
           << (r.match ? "ok" : "MISMATCH") << '\n';
    }
}

}  // namespace

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    check_count(cfg.count);
    Sink sink(cfg.output, out);
    auto& os = sink.stream();
    if (cfg.format == Format::csv) os << "index,s,t,a,b,c\n";
    OrderedGenerator gen;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const Triple tr = gen.next();
        if (cfg.format == Format::csv) {
            os << *tr.index << ',' << tr.s << ',' << tr.t << ',' << tr.a << ',' << tr.b << ','
               << tr.c << '\n';
        } else {
            os << json{{"index", *tr.index}, {"s", tr.s}, {"t", tr.t},
                       {"a", tr.a},          {"b", tr.b}, {"c", tr.c}}
                      .dump()
               << '\n';
        }
    }
    sink.close();
    return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    check_count(cfg.count);
    require_odd_prime(cfg.modulus);
    const u64 p = cfg.modulus;
    Sink sink(cfg.output, out);
    auto& os = sink.stream();
    if (cfg.format == Format::csv) os << "index,a,residue,letter\n";

    std::string letters;
    OrderedGenerator gen;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const Triple tr = gen.next();
        const ClassLabel l = classify(tr.a, p);
        const std::string letter = l.has_letter(p) ? std::string(1, l.letter()) : std::string();
        letters += letter;
        if (cfg.format == Format::csv) {
            os << i << ',' << tr.a << ',' << l.residue << ',' << letter << '\n';
        } else {
            os << json{{"index", i}, {"a", tr.a}, {"residue", l.residue}, {"letter", letter}}.dump()
               << '\n';
        }
    }
    if (p <= 26) {
        if (cfg.format == Format::csv) {
            os << "# letters: " << letters << '\n';
        } else {
            os << json{{"letters", letters}}.dump() << '\n';
        }
    }
    sink.close();
    return kOk;
}

int cmd_gaps(const RunConfig& cfg, std::ostream& out) {
    require_odd_prime(cfg.modulus);
    const ClassLabel label = ClassLabel::parse(cfg.class_label, cfg.modulus);
    const ClassSequence cs = source_classes(cfg);
    const GapSequence gs = gap_sequence(cs, label);

    Sink sink(cfg.output, out);
    auto& os = sink.stream();
    const auto positions = gs.positions();
    if (cfg.format == Format::csv) {
        os << "j,position,gap\n";
        for (std::size_t j = 0; j < gs.gaps.size(); ++j) {
            os << j << ',' << positions[j + 1] << ',' << gs.gaps[j] << '\n';
        }
        os << "# class=" << label.name(cs.modulus) << ",modulus=" << cs.modulus
           << ",occurrences=" << positions.size();
        if (gs.first_position) os << ",first_position=" << *gs.first_position;
        if (!gs.gaps.empty()) {
            os << ",mean_gap=" << format_real(to_double(mean_gap(gs)))
               << ",expected_mean_gap=" << to_string(expected_mean_gap(cs.modulus, label));
        }
        os << '\n' << "# gaps: " << join(gs.gaps) << '\n';
    } else {
        for (std::size_t j = 0; j < gs.gaps.size(); ++j) {
            os << json{{"j", j}, {"position", positions[j + 1]}, {"gap", gs.gaps[j]}}.dump() << '\n';
        }
        json summary{{"summary", true},
                     {"class", label.name(cs.modulus)},
                     {"modulus", cs.modulus},
                     {"occurrences", positions.size()},
                     {"gaps", gs.gaps}};
        if (gs.first_position) summary["first_position"] = *gs.first_position;
        os << summary.dump() << '\n';
    }
    sink.close();
    return kOk;
}

int cmd_autocorr(const RunConfig& cfg, std::ostream& out) {
    require_odd_prime(cfg.modulus);
    const u64 p = cfg.modulus;

    if (cfg.all_classes) {
        if (cfg.output.empty()) throw InvalidArgument("--all-classes needs --output <directory>");
        const ClassSequence cs = source_classes(cfg);
        std::vector<ClassAutocorr> results;
        for (const ClassLabel& l : all_labels(p)) {
            results.push_back(autocorr_for_class(cs, l, cfg.max_lag, cfg.mode));
        }
        std::error_code ec;
        fs::create_directories(cfg.output, ec);
        if (ec) throw IoError("cannot create directory '" + cfg.output + "': " + ec.message());
        const char* ext = cfg.format == Format::csv ? ".csv" : ".jsonl";
        for (const auto& r : results) {
            const auto path = (fs::path(cfg.output) /
                               ("autocorr_p" + std::to_string(p) + "_" + r.label.name(p) + ext))
                                  .string();
            Sink sink(path, out);
            write_autocorr_rows(sink.stream(), cfg.format, r.result);
            sink.close();
            out << "class=" << r.label.name(p) << ',' << summary_line(r.summary) << '\n';
        }
        return kOk;
    }

    const ClassLabel label = ClassLabel::parse(cfg.class_label, p);
    const ClassSequence cs = source_classes(cfg);
    const ClassAutocorr r = autocorr_for_class(cs, label, cfg.max_lag, cfg.mode);
    Sink sink(cfg.output, out);
    auto& os = sink.stream();
    write_autocorr_rows(os, cfg.format, r.result);
    if (cfg.format == Format::csv) {
        os << "# summary: class=" << label.name(p) << ',' << summary_line(r.summary) << '\n';
    } else {
        os << summary_json(p, label, r.summary).dump() << '\n';
    }
    sink.close();
    return kOk;
}

int cmd_table2(const RunConfig& cfg, std::ostream& out) {
    const auto lengths = cfg.lengths.empty() ? default_lengths() : cfg.lengths;
    const auto primes = cfg.primes.empty() ? default_primes() : cfg.primes;
    std::size_t n_max = 0;
    for (std::size_t l : lengths) n_max = std::max(n_max, l);
    check_count(n_max);
    for (u64 p : primes) require_odd_prime(p);

    const DivisibilityTable t = divisibility_table(n_max, lengths, primes);
    Sink sink(cfg.output, out);
    if (cfg.compare) {
        write_table_compare(sink.stream(), t);
    } else {
        write_table_matrix(sink.stream(), t);
    }
    sink.close();
    return kOk;
}

int cmd_theorem_check(const RunConfig& cfg, std::ostream& out) {
    const auto primes = cfg.primes.empty() ? default_primes() : cfg.primes;
    for (u64 p : primes) require_odd_prime(p);
    const auto rows = theorem_rows(primes);
    Sink sink(cfg.output, out);
    auto& os = sink.stream();
    write_theorem_rows(os, rows);
    for (const auto& r : rows) {
        os << "# p=" << r.prime << ": " << r.census.divisible << '/' << r.census.qualifying
           << " = " << to_string(r.census.ratio()) << '\n';
    }
    sink.close();
    for (const auto& r : rows) {
        if (!r.match) return kMismatch;
    }
    return kOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
    const std::size_t count = cfg.quick ? 10000 : cfg.count;
    check_count(count);
    const fs::path dir = cfg.output.empty() ? fs::path("report") : fs::path(cfg.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create report directory '" + dir.string() + "'");
    }
    auto file = [&](const std::string& name) { return (dir / name).string(); };

    const auto stream = generate_ordered(count);
    std::ostringstream summary;
    summary << "triples: " << count << '\n';
    bool all_match = true;

    {
        std::vector<std::size_t> lengths;
        for (std::size_t l : published::kTableLengths) {
            if (l <= count) lengths.push_back(l);
        }
        if (lengths.empty() || lengths.back() != count) lengths.push_back(count);
        const auto primes = default_primes();
        const auto t = divisibility_table(stream, lengths, primes);
        Sink m(file("table2.csv"), out);
        write_table_matrix(m.stream(), t);
        m.close();
        Sink c(file("table2_compare.csv"), out);
        write_table_compare(c.stream(), t);
        c.close();
    }

    {
        const auto rows = theorem_rows(default_primes());
        Sink s(file("theorem.csv"), out);
        write_theorem_rows(s.stream(), rows);
        s.close();
        std::size_t ok = 0;
        for (const auto& r : rows) ok += r.match ? 1 : 0;
        all_match = all_match && ok == rows.size();
        summary << "theorem census: " << ok << '/' << rows.size() << " primes match 2/(p+1)\n";
    }

    Sink freq(file("class_frequencies.csv"), out);
    freq.stream() << "modulus,class,count,fraction,expected\n";
    Sink acs(file("autocorr_summary.csv"), out);
    acs.stream() << "modulus,class,occurrences,mean_gap,expected_mean_gap,peak,offpeak_mean,"
                    "offpeak_min,offpeak_max,expected_offpeak,deviation\n";
    Sink rnd(file("randomness.csv"), out);
    rnd.stream() << "test,statistic,df,threshold,pass\n";
    auto write_report = [&](const TestReport& r) {
        rnd.stream() << r.name << ',' << format_real(r.statistic) << ',' << r.degrees_of_freedom
                     << ',' << format_real(r.threshold) << ',' << (r.pass ? "pass" : "fail")
                     << '\n';
    };
    std::ostringstream strings;

    for (u64 p : {u64{3}, u64{5}, u64{7}}) {
        const ClassSequence cs = class_sequence(stream, p);
        const auto counts = class_frequencies(cs);
        for (const ClassLabel& l : all_labels(p)) {
            const double expected = l.residue == 0 ? 2.0 / static_cast<double>(p + 1)
                                                   : 1.0 / static_cast<double>(p + 1);
            freq.stream() << p << ',' << l.name(p) << ',' << counts[l.residue] << ','
                          << format_real(static_cast<double>(counts[l.residue]) /
                                         static_cast<double>(count))
                          << ',' << format_real(expected) << '\n';
        }

        write_report(chi_square_frequencies(cs));

        for (const ClassLabel& l : all_labels(p)) {
            const auto r = autocorr_for_class(cs, l, std::min(cfg.max_lag, count / 4), cfg.mode);
            Sink data(file("autocorr_p" + std::to_string(p) + "_" + l.name(p) + ".csv"), out);
            write_autocorr_rows(data.stream(), Format::csv, r.result);
            data.close();
            acs.stream() << p << ',' << l.name(p) << ',' << r.gaps.gaps.size() + 1 << ','
                         << format_real(to_double(mean_gap(r.gaps))) << ','
                         << to_string(expected_mean_gap(p, l)) << ','
                         << format_real(r.summary.peak) << ','
                         << format_real(r.summary.offpeak_mean) << ','
                         << format_real(r.summary.offpeak_min) << ','
                         << format_real(r.summary.offpeak_max) << ','
                         << format_real(r.summary.expected) << ','
                         << format_real(r.summary.deviation) << '\n';
            write_report(serial_correlation(r.gaps, 1));
            if (p == 3 && l.residue == 0) {
                summary << "p=3 class A: C(0)=" << format_real(r.summary.peak)
                        << " offpeak_mean=" << format_real(r.summary.offpeak_mean)
                        << " halving-model C(0)="
                        << format_real(c0_series_estimate(GapModel::halving_mod3())) << '\n';
                Sink hist(file("gap_histogram_p3_A.csv"), out);
                hist.stream() << "gap,count,fraction\n";
                for (const auto& [gap, n] : gap_histogram(r.gaps)) {
                    hist.stream() << gap << ',' << n << ','
                                  << format_real(static_cast<double>(n) /
                                                 static_cast<double>(r.gaps.gaps.size()))
                                  << '\n';
                }
                hist.close();
            }
        }

        const std::string printed(published::class_string(p));
        const std::string ours = cs.letters().substr(0, std::min(printed.size(), cs.size()));
        std::size_t agree = 0;
        std::size_t first_diff = ours.size();
        for (std::size_t i = 0; i < ours.size(); ++i) {
            if (ours[i] == printed[i]) {
                ++agree;
            } else if (first_diff == ours.size()) {
                first_diff = i;
            }
        }
        strings << "modulus " << p << '\n'
                << "  printed:  " << printed << '\n'
                << "  computed: " << ours << '\n'
                << "  agreement: " << agree << '/' << ours.size();
        if (first_diff < ours.size()) strings << ", first difference at index " << first_diff;
        strings << '\n';
    }
    freq.close();
    acs.close();
    rnd.close();

    Sink cls(file("class_strings.txt"), out);
    cls.stream() << strings.str();
    cls.close();

    Sink sum(file("summary.txt"), out);
    sum.stream() << summary.str();
    sum.close();

    out << "report written to " << dir.string() << '\n';
    return all_match ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primitive Pythagorean triple residue-class workbench", "pptseq"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "circular";
    std::string format = "csv";

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--output", cfg.output, "output path (default stdout)");
    };
    auto add_count = [&](CLI::App* sub) {
        sub->add_option("--count", cfg.count, "number of triples in c order")
            ->capture_default_str();
    };
    auto add_modulus = [&](CLI::App* sub) {
        sub->add_option("--modulus", cfg.modulus, "odd prime modulus")->capture_default_str();
    };

    auto* gen = app.add_subcommand("generate", "emit triples in increasing c");
    add_count(gen);
    add_output(gen);

    auto* cls = app.add_subcommand("classify", "residue class of a for each triple");
    add_count(cls);
    add_modulus(cls);
    add_output(cls);

    auto* gaps = app.add_subcommand("gaps", "gap sequence of one class");
    add_count(gaps);
    add_modulus(gaps);
    gaps->add_option("--class", cfg.class_label, "class letter or residue")->capture_default_str();
    gaps->add_option("--from-string", cfg.from_string, "use this letter string as the class sequence");
    add_output(gaps);

    auto* ac = app.add_subcommand("autocorr", "autocorrelation of a class gap sequence");
    add_count(ac);
    add_modulus(ac);
    ac->add_option("--class", cfg.class_label, "class letter or residue")->capture_default_str();
    ac->add_flag("--all-classes", cfg.all_classes, "one file per class under --output");
    ac->add_option("--max-lag", cfg.max_lag, "largest lag k")->capture_default_str();
    ac->add_option("--mode", mode, "circular or windowed")
        ->check(CLI::IsMember({"circular", "windowed"}));
    ac->add_option("--from-string", cfg.from_string, "use this letter string as the class sequence");
    add_output(ac);

    auto* t2 = app.add_subcommand("table2", "prefix divisibility counts");
    t2->add_option("--lengths", cfg.lengths, "prefix lengths")->delimiter(',');
    t2->add_option("--primes", cfg.primes, "primes")->delimiter(',');
    t2->add_flag("--compare", cfg.compare, "per-cell comparison with the published table");
    add_output(t2);

    auto* th = app.add_subcommand("theorem-check", "grid census against 2/(p+1)");
    th->add_option("--primes,--modulus", cfg.primes, "primes")->delimiter(',');
    th->add_option("--output", cfg.output, "output path (default stdout)");

    auto* rep = app.add_subcommand("report", "write the full reproduction bundle");
    add_count(rep);
    rep->add_option("--max-lag", cfg.max_lag, "largest lag k")->capture_default_str();
    rep->add_option("--mode", mode, "circular or windowed")
        ->check(CLI::IsMember({"circular", "windowed"}));
    rep->add_flag("--quick", cfg.quick, "use 10^4 triples");
    rep->add_option("--output", cfg.output, "report directory")->default_str("report");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        cfg.mode = parse_boundary_mode(mode);
        cfg.format = format == "jsonl" ? Format::jsonl : Format::csv;
        if (gen->parsed()) return cmd_generate(cfg, out);
        if (cls->parsed()) return cmd_classify(cfg, out);
        if (gaps->parsed()) return cmd_gaps(cfg, out);
        if (ac->parsed()) return cmd_autocorr(cfg, out);
        if (t2->parsed()) return cmd_table2(cfg, out);
        if (th->parsed()) return cmd_theorem_check(cfg, out);
        if (rep->parsed()) return cmd_report(cfg, out);
    } catch (const GeneratorError& e) {
        err << "error: " << e.what() << '\n';
        return e.fault() == GeneratorFault::overflow ? kOverflow : kUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kOverflow;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace pptseq::cli
