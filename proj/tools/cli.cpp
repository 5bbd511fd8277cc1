#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pnw/pnw.hpp"

namespace pnw::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Config {
    Alphabet alphabet = Alphabet::ab;
    Format format = Format::text;
    unsigned jobs = 1;
    std::size_t count_bound = default_count_bound;
    std::size_t census_bound = default_census_bound;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

// "-" reads one word per line from stdin; blank lines are skipped.
std::vector<Word> read_words(const std::string& arg, const Config& cfg, std::istream& in) {
    if (arg != "-") return {parse_word(arg, cfg.alphabet)};
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty()) words.push_back(parse_word(line, cfg.alphabet));
    }
    return words;
}

Word read_one_word(const std::string& arg, const Config& cfg, std::istream& in) {
    auto words = read_words(arg, cfg, in);
    if (words.size() != 1) throw std::invalid_argument("expected exactly one word on stdin");
    return words.front();
}

std::string read_file(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), {}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << content;
}

template <class Range>
std::vector<std::size_t> to_vector(const Range& r) {
    return {r.begin(), r.end()};
}

// Rows of right-aligned numbers under a labelled header row.
struct Row {
    std::string label;
    std::vector<std::string> cells;
};

void print_table(std::ostream& out, const std::vector<Row>& rows) {
    std::size_t label_width = 0, cell_width = 0;
    for (const auto& r : rows) {
        label_width = std::max(label_width, r.label.size());
        for (const auto& c : r.cells) cell_width = std::max(cell_width, c.size());
    }
    for (const auto& r : rows) {
        std::string line = r.label + std::string(label_width - r.label.size(), ' ');
        for (const auto& c : r.cells) line += ' ' + std::string(cell_width - c.size() + 1, ' ') + c;
        out << line << '\n';
    }
}

template <class Range>
std::vector<std::string> cells(const Range& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(std::to_string(v));
    return out;
}

std::vector<std::string> iota_cells(std::size_t first, std::size_t last) {
    std::vector<std::string> out;
    for (std::size_t k = first; k <= last; ++k) out.push_back(std::to_string(k));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_pnf(const std::string& arg, const Config& cfg, Io io) {
    for (const auto& w : read_words(arg, cfg, io.in)) {
        const auto pair = build_pnf_pair(w);
        switch (cfg.format) {
            case Format::text:
                io.out << "PNF_a " << pair.pnf_a.str() << "\nPNF_b " << pair.pnf_b.str() << '\n';
                break;
            case Format::json:
                io.out << json{{"word", w.str()}, {"pnf_a", pair.pnf_a.str()}, {"pnf_b", pair.pnf_b.str()}}.dump()
                       << '\n';
                break;
            case Format::csv:
                io.out << w.str() << ',' << pair.pnf_a.str() << ',' << pair.pnf_b.str() << '\n';
                break;
        }
    }
    return ok;
}

int cmd_test(const std::string& arg, const Config& cfg, Io io) {
    int code = ok;
    for (const auto& w : read_words(arg, cfg, io.in)) {
        const auto witness = find_witness(w);
        if (witness) code = negative;
        switch (cfg.format) {
            case Format::text:
                if (!witness) {
                    io.out << "normal\n";
                } else {
                    io.out << "not-normal\nwitness " << witness->factor.str() << " at " << witness->start << ": "
                           << witness->factor_a_count << " a's, prefix of length " << witness->length << " has "
                           << witness->prefix_a_count << '\n';
                }
                break;
            case Format::json: {
                json doc{{"word", w.str()}, {"normal", !witness}};
                if (witness)
                    doc["witness"] = {{"factor", witness->factor.str()},
                                      {"start", witness->start},
                                      {"length", witness->length},
                                      {"factor_a", witness->factor_a_count},
                                      {"prefix_a", witness->prefix_a_count}};
                io.out << doc.dump() << '\n';
                break;
            }
            case Format::csv:
                io.out << w.str() << ',' << (witness ? "not-normal" : "normal") << ','
                       << (witness ? witness->factor.str() : "") << '\n';
                break;
        }
    }
    return code;
}

int cmd_profiles(const std::string& arg, const Config& cfg, Io io) {
    for (const auto& w : read_words(arg, cfg, io.in)) {
        const auto fa = max_a_profile(w);
        const auto fb = max_b_profile(w);
        const auto fmin = min_a_profile(w);
        switch (cfg.format) {
            case Format::text:
                print_table(io.out, {{"k", iota_cells(0, w.size())},
                                     {"F_a", cells(fa.values())},
                                     {"F_b", cells(fb.values())}});
                break;
            case Format::json:
                io.out << json{{"n", w.size()},
                               {"Fa", to_vector(fa.values())},
                               {"Fb", to_vector(fb.values())},
                               {"fa", to_vector(fmin.values())}}
                              .dump()
                       << '\n';
                break;
            case Format::csv:
                io.out << "k,F_a,F_b,f_a\n";
                for (std::size_t k = 0; k <= w.size(); ++k)
                    io.out << k << ',' << fa[k] << ',' << fb[k] << ',' << fmin[k] << '\n';
                break;
        }
    }
    return ok;
}

int print_verdict(bool occurs, const Config& cfg, ParikhVector q, Io io) {
    if (cfg.format == Format::json)
        io.out << json{{"x", q.a_count}, {"y", q.b_count}, {"occurs", occurs}}.dump() << '\n';
    else
        io.out << (occurs ? "occurs" : "absent") << '\n';
    return occurs ? ok : negative;
}

int cmd_query(const std::string& arg, std::size_t x, std::size_t y, const Config& cfg, Io io) {
    int code = ok;
    for (const auto& w : read_words(arg, cfg, io.in)) {
        if (print_verdict(build_index(w).query({x, y}), cfg, {x, y}, io) != ok) code = negative;
    }
    return code;
}

int cmd_index_build(const std::string& arg, const std::string& output, const Config& cfg, Io io) {
    const auto doc = index_to_json(build_index(read_one_word(arg, cfg, io.in)));
    if (output.empty())
        io.out << doc << '\n';
    else
        write_file(output, doc + '\n');
    return ok;
}

int cmd_index_query(const std::string& file, std::size_t x, std::size_t y, const Config& cfg, Io io) {
    const auto ix = index_from_json(read_file(file, io.in));
    return print_verdict(ix.query({x, y}), cfg, {x, y}, io);
}

int cmd_index_pnf(const std::string& file, const Config& cfg, Io io) {
    const auto pair = pnf_from_index(index_from_json(read_file(file, io.in)));
    switch (cfg.format) {
        case Format::text: io.out << "PNF_a " << pair.pnf_a.str() << "\nPNF_b " << pair.pnf_b.str() << '\n'; break;
        case Format::json: io.out << json{{"pnf_a", pair.pnf_a.str()}, {"pnf_b", pair.pnf_b.str()}}.dump() << '\n'; break;
        case Format::csv: io.out << pair.pnf_a.str() << ',' << pair.pnf_b.str() << '\n'; break;
    }
    return ok;
}

int cmd_classify(const std::string& arg, const Config& cfg, Io io) {
    for (const auto& w : read_words(arg, cfg, io.in)) {
        const auto c = classify(w);
        io.out << json{{"is_lyndon", c.is_lyndon},
                       {"is_necklace", c.is_necklace},
                       {"is_pre_necklace", c.is_pre_necklace},
                       {"is_prefix_normal", c.is_prefix_normal}}
                      .dump()
               << '\n';
    }
    return ok;
}

struct EnumerateArgs {
    std::size_t max_n = 0;
    std::string what = "both";
    bool max_class = false;
    std::string csv_path;
};

std::string counts_csv(const std::vector<CountsRow>& rows) {
    std::ostringstream csv;
    csv << "n,prefix_normal,pre_necklace,max_class_size\n";
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows)
        csv << r.n << ',' << opt(r.count_prefix_normal) << ',' << opt(r.count_pre_necklace) << ','
            << opt(r.max_class_size) << '\n';
    return csv.str();
}

int cmd_enumerate(const EnumerateArgs& args, const Config& cfg, Io io) {
    if (args.max_n > cfg.count_bound)
        throw std::length_error("--max-n " + std::to_string(args.max_n) + " exceeds bound " +
                                std::to_string(cfg.count_bound));
    if (args.max_class && args.max_n > cfg.census_bound)
        throw std::length_error("--max-class needs --max-n <= " + std::to_string(cfg.census_bound));

    const CountsSelection what{.prefix_normal = args.what != "prenecklace",
                               .pre_necklace = args.what != "pnf",
                               .max_class_size = args.max_class};
    std::vector<CountsRow> rows;
    for (std::size_t n = 1; n <= args.max_n; ++n) {
        CountsRow row{.n = n};
        if (what.prefix_normal) row.count_prefix_normal = count_prefix_normal(n, {cfg.jobs, cfg.count_bound});
        if (what.pre_necklace) row.count_pre_necklace = count_pre_necklaces(n, {cfg.jobs, cfg.count_bound});
        if (what.max_class_size) row.max_class_size = max_class_size(n, {cfg.jobs, cfg.census_bound});
        rows.push_back(row);
    }

    const std::string csv = counts_csv(rows);
    if (!args.csv_path.empty()) write_file(args.csv_path, csv);

    switch (cfg.format) {
        case Format::text: {
            std::vector<Row> table{{"n", iota_cells(1, args.max_n)}};
            auto add = [&](const char* label, auto member) {
                Row r{label, {}};
                for (const auto& row : rows) r.cells.push_back(std::to_string(*(row.*member)));
                table.push_back(std::move(r));
            };
            if (what.prefix_normal) add("L_a", &CountsRow::count_prefix_normal);
            if (what.pre_necklace) add("PL", &CountsRow::count_pre_necklace);
            if (what.max_class_size) add("max|[w]|", &CountsRow::max_class_size);
            print_table(io.out, table);
            break;
        }
        case Format::json: {
            json out = json::array();
            for (const auto& r : rows) {
                json row{{"n", r.n}};
                if (r.count_prefix_normal) row["prefix_normal"] = *r.count_prefix_normal;
                if (r.count_pre_necklace) row["pre_necklace"] = *r.count_pre_necklace;
                if (r.max_class_size) row["max_class_size"] = *r.max_class_size;
                out.push_back(row);
            }
            io.out << out.dump() << '\n';
            break;
        }
        case Format::csv: io.out << csv; break;
    }
    return ok;
}

struct ClassesArgs {
    std::size_t n = 0;
    bool histogram = false;
    std::string members;
};

int cmd_classes(const ClassesArgs& args, bool have_n, const Config& cfg, Io io) {
    const CensusOptions opts{cfg.jobs, cfg.census_bound};
    if (!args.members.empty()) {
        const Word pnf = parse_word(args.members, cfg.alphabet);
        if (have_n && pnf.size() != args.n)
            throw std::invalid_argument("--members word has length " + std::to_string(pnf.size()) + ", not --n");
        const auto members = class_members(pnf, opts);
        switch (cfg.format) {
            case Format::json: {
                json list = json::array();
                for (const auto& m : members) list.push_back(m.str());
                io.out << json{{"pnf", pnf.str()}, {"members", list}}.dump() << '\n';
                break;
            }
            default:
                for (const auto& m : members) io.out << m.str() << '\n';
        }
        return ok;
    }
    if (!have_n) throw CLI::RequiredError("--n or --members");

    const auto census = class_census(args.n, opts);
    if (args.histogram) {
        const auto histogram = census.histogram();
        switch (cfg.format) {
            case Format::text: {
                std::vector<Row> table{{"size", {}}, {"classes", {}}};
                for (const auto& [size, count] : histogram) {
                    table[0].cells.push_back(std::to_string(size));
                    table[1].cells.push_back(std::to_string(count));
                }
                print_table(io.out, table);
                break;
            }
            case Format::json: {
                json list = json::array();
                for (const auto& [size, count] : histogram) list.push_back({{"size", size}, {"classes", count}});
                io.out << json{{"n", census.n}, {"histogram", list}}.dump() << '\n';
                break;
            }
            case Format::csv:
                io.out << "size,classes\n";
                for (const auto& [size, count] : histogram) io.out << size << ',' << count << '\n';
                break;
        }
        return ok;
    }

    switch (cfg.format) {
        case Format::text:
            io.out << "PNF_a" << std::string(std::max<std::size_t>(args.n, 5) - 5 + 2, ' ') << "card.\n";
            for (const auto& [pnf, size] : census.classes)
                io.out << pnf.str() << std::string(std::max<std::size_t>(args.n, 5) - args.n + 2, ' ') << size << '\n';
            io.out << "classes " << census.classes.size() << ", words " << census.total_words << ", largest "
                   << census.max_class_size() << '\n';
            break;
        case Format::json: {
            json list = json::array();
            for (const auto& [pnf, size] : census.classes) list.push_back({{"pnf", pnf.str()}, {"size", size}});
            io.out << json{{"n", census.n}, {"total_words", census.total_words}, {"classes", list}}.dump() << '\n';
            break;
        }
        case Format::csv:
            io.out << "pnf,size\n";
            for (const auto& [pnf, size] : census.classes) io.out << pnf.str() << ',' << size << '\n';
            break;
    }
    return ok;
}

struct RegionArgs {
    std::string word;
    std::string svg_path;
    std::string csv_path;
    bool suffix_paths = false;
    double unit = 16.0;
};

int cmd_region(const RegionArgs& args, const Config& cfg, Io io) {
    const Word w = read_one_word(args.word, cfg, io.in);
    const std::string svg = render_svg(w, {.unit = args.unit, .suffix_paths = args.suffix_paths});
    if (!args.csv_path.empty()) write_file(args.csv_path, region_csv(w));
    if (!args.svg_path.empty()) write_file(args.svg_path, svg);

    if (cfg.format == Format::csv) {
        io.out << region_csv(w);
    } else if (cfg.format == Format::json) {
        const auto r = region(w);
        io.out << json{{"n", r.n}, {"upper", r.upper}, {"lower", r.lower}}.dump() << '\n';
    } else if (args.svg_path.empty()) {
        io.out << svg;
    }
    return ok;
}

int cmd_verify_tables(std::size_t max_n, const Config& cfg, Io io) {
    const auto report = verify_tables(reference_tables(), {.max_n = max_n, .jobs = cfg.jobs});
    if (cfg.format == Format::json) {
        json list = json::array();
        for (const auto& c : report.cells)
            list.push_back({{"table", c.table},
                            {"cell", c.cell},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass()}});
        io.out << json{{"cells", list}, {"failures", report.failures()}}.dump() << '\n';
    } else if (cfg.format == Format::csv) {
        io.out << "table,cell,expected,actual,pass\n";
        for (const auto& c : report.cells)
            io.out << c.table << ',' << c.cell << ',' << c.expected << ',' << c.actual << ','
                   << (c.pass() ? "true" : "false") << '\n';
    } else {
        for (const auto& c : report.cells)
            io.out << (c.pass() ? "PASS " : "FAIL ") << c.table << "  " << c.cell << "  expected " << c.expected
                   << "  actual " << c.actual << '\n';
        io.out << report.cells.size() << " cells, " << report.failures() << " mismatches\n";
    }
    return report.all_pass() ? ok : negative;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    Config cfg;

    CLI::App app{"Prefix normal forms, jumbled pattern matching indexes and word census tools", "pnw"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    std::string alphabet_name = "ab", format_name = "text";
    app.add_option("--alphabet", alphabet_name, "Input alphabet: ab, or binary (1 is a, 0 is b)")
        ->check(CLI::IsMember({"ab", "binary"}));
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads for enumerate/classes/verify-tables (0 = all cores)");
    app.add_option("--count-bound", cfg.count_bound, "Largest length for backtracking counts")
        ->check(CLI::PositiveNumber);
    app.add_option("--census-bound", cfg.census_bound, "Largest length for exhaustive class census")
        ->check(CLI::Range(std::size_t{1}, std::size_t{32}));

    std::string word, file, output;
    std::size_t x = 0, y = 0;

    auto* pnf = app.add_subcommand("pnf", "Print PNF_a and PNF_b");
    pnf->add_option("word", word, "Word, or - for one word per line on stdin")->required();

    auto* test = app.add_subcommand("test", "Decide prefix normality; exit 1 if not normal");
    test->add_option("word", word)->required();

    auto* profiles = app.add_subcommand("profiles", "Print F_a and F_b for every length");
    profiles->add_option("word", word)->required();

    auto* query = app.add_subcommand("query", "Does some factor have Parikh vector (x, y)?");
    query->add_option("word", word)->required();
    query->add_option("x", x, "Number of a's")->required();
    query->add_option("y", y, "Number of b's")->required();

    auto* index = app.add_subcommand("index", "Build and query serialized indexes");
    index->require_subcommand(1);
    index->fallthrough();
    auto* index_build = index->add_subcommand("build", "Write the index of a word as JSON");
    index_build->add_option("word", word)->required();
    index_build->add_option("-o,--output", output, "Output file (default stdout)");
    auto* index_query = index->add_subcommand("query", "Query an index file");
    index_query->add_option("file", file)->required();
    index_query->add_option("x", x)->required();
    index_query->add_option("y", y)->required();
    auto* index_pnf = index->add_subcommand("pnf", "Recover the PNF pair from an index file");
    index_pnf->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Lyndon / necklace / pre-necklace / prefix normal");
    classify_cmd->add_option("word", word)->required();

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "Count prefix normal words and pre-necklaces per length");
    enumerate->add_option("--max-n", enum_args.max_n, "Largest length")->required();
    enumerate->add_option("--what", enum_args.what)->check(CLI::IsMember({"pnf", "prenecklace", "both"}));
    enumerate->add_flag("--max-class", enum_args.max_class, "Also report the largest PNF class");
    enumerate->add_option("--csv", enum_args.csv_path, "Also write the table as CSV");

    ClassesArgs class_args;
    auto* classes = app.add_subcommand("classes", "PNF equivalence classes of all words of one length");
    auto* n_opt = classes->add_option("--n", class_args.n, "Word length");
    classes->add_flag("--histogram", class_args.histogram, "Number of classes per class size");
    classes->add_option("--members", class_args.members, "List the words whose PNF_a is this word");

    RegionArgs region_args;
    auto* region_cmd = app.add_subcommand("region", "Draw the word, its normal forms and its Parikh set");
    region_cmd->add_option("word", region_args.word)->required();
    region_cmd->add_option("-o,--output", region_args.svg_path, "SVG file (default stdout)");
    region_cmd->add_option("--csv", region_args.csv_path, "Boundary table as CSV");
    region_cmd->add_flag("--suffix-paths", region_args.suffix_paths, "Draw every suffix path");
    region_cmd->add_option("--unit", region_args.unit, "Pixels per lattice step")->check(CLI::PositiveNumber);

    std::size_t verify_max_n = 16;
    auto* verify = app.add_subcommand("verify-tables", "Recompute the reference tables cell by cell");
    verify->add_option("--max-n", verify_max_n, "Skip cells for longer words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "pnw: " << e.what() << '\n';
        return usage;
    }

    cfg.alphabet = alphabet_name == "binary" ? Alphabet::binary : Alphabet::ab;
    cfg.format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;

    try {
        if (*pnf) return cmd_pnf(word, cfg, io);
        if (*test) return cmd_test(word, cfg, io);
        if (*profiles) return cmd_profiles(word, cfg, io);
        if (*query) return cmd_query(word, x, y, cfg, io);
        if (*index_build) return cmd_index_build(word, output, cfg, io);
        if (*index_query) return cmd_index_query(file, x, y, cfg, io);
        if (*index_pnf) return cmd_index_pnf(file, cfg, io);
        if (*classify_cmd) return cmd_classify(word, cfg, io);
        if (*enumerate) return cmd_enumerate(enum_args, cfg, io);
        if (*classes) return cmd_classes(class_args, n_opt->count() > 0, cfg, io);
        if (*region_cmd) return cmd_region(region_args, cfg, io);
        if (*verify) return cmd_verify_tables(verify_max_n, cfg, io);
    } catch (const std::exception& e) {
        err << "pnw: " << e.what() << '\n';
        return usage;
    }
    err << "pnw: no subcommand\n";
    return usage;
}

}  // namespace pnw::cli
