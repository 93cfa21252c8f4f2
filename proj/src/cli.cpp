#include "valtree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "valtree/blowup.hpp"
#include "valtree/correspondence.hpp"
#include "valtree/keypoly.hpp"
#include "valtree/poly_io.hpp"
#include "valtree/serialize.hpp"
#include "valtree/tree.hpp"

namespace valtree::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    f << text << "\n";
}

MacLaneChain load_chain(const std::string& path, bool check = true) {
    MacLaneChain nu = chain_from_json(read_file(path));
    if (check) require_valid(nu);
    return nu;
}

std::string step_text(const BlowupStep& s) {
    return s.chart == Chart::X ? "X " + s.c.to_string() : "Y";
}

}  // namespace

std::string tree_dot(const std::vector<MacLaneChain>& chains) {
    std::vector<MacLaneChain> nodes;
    auto add = [&nodes](const MacLaneChain& c) {
        for (const auto& n : nodes)
            if (compare(n, c).relation == Relation::Equal) return false;
        nodes.push_back(c);
        return true;
    };
    for (const auto& c : chains) add(c);
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = nodes.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) grew |= add(infimum(nodes[i], nodes[j]));
    }
    std::vector<std::pair<std::string, MacLaneChain>> keyed;
    for (auto& n : nodes) keyed.emplace_back(chain_to_json(n), n);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::size_t n = keyed.size();
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) less[i][j] = compare(keyed[i].second, keyed[j].second).relation == Relation::Less;

    std::ostringstream dot;
    dot << "digraph valtree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < n; ++i) dot << "  n" << i << " [label=\"" << chain_to_text(keyed[i].second) << "\"];\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!less[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (less[i][k] && less[k][j]) covered = false;
            if (covered) dot << "  n" << i << " -> n" << j << ";\n";
        }
    }
    dot << "}";
    return dot.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Valuations of k(x,y) centered at the origin, as MacLane chains", "val"};
    app.require_subcommand(1);

    std::string chain_file, poly, out_file, seq_file, field_text = "Q", t_text;
    std::string file_a, file_b;
    std::vector<std::string> chain_files;
    int max_steps = 32, steps = 6;

    auto* eval = app.add_subcommand("eval", "evaluate a chain on a polynomial");
    eval->add_option("--chain", chain_file, "chain file")->required();
    eval->add_option("--poly", poly, "polynomial")->required();

    auto* eps = app.add_subcommand("epsilon", "epsilon data of a polynomial");
    eps->add_option("--chain", chain_file, "chain file")->required();
    eps->add_option("--poly", poly, "polynomial")->required();

    auto* val = app.add_subcommand("validate", "check the chain invariants");
    val->add_option("chain", chain_file, "chain file")->required();

    auto* cmp = app.add_subcommand("compare", "compare two valuations");
    cmp->add_option("a", file_a, "first chain file")->required();
    cmp->add_option("b", file_b, "second chain file")->required();

    auto* inf = app.add_subcommand("inf", "infimum of two valuations");
    inf->add_option("a", file_a, "first chain file")->required();
    inf->add_option("b", file_b, "second chain file")->required();
    inf->add_option("-o,--output", out_file, "output chain file");

    auto* seg = app.add_subcommand("segment", "point of the segment from the root");
    seg->add_option("--chain", chain_file, "chain file")->required();
    seg->add_option("--t", t_text, "parameter in [1, beta/d]")->required();
    seg->add_option("-o,--output", out_file, "output chain file");

    auto* to_bl = app.add_subcommand("to-blowups", "blowup sequence of a chain");
    to_bl->add_option("chain", chain_file, "chain file")->required();
    to_bl->add_option("--max-steps", max_steps, "step limit")->check(CLI::PositiveNumber);
    to_bl->add_option("-o,--output", out_file, "output sequence file");

    auto* from_bl = app.add_subcommand("from-blowups", "chain of a blowup sequence");
    from_bl->add_option("seq", seq_file, "sequence file")->required();
    from_bl->add_option("-o,--output", out_file, "output chain file");

    auto* cexp = app.add_subcommand("char-exp", "first characteristic exponent");
    cexp->add_option("--poly", poly, "polynomial")->required();
    cexp->add_option("--field", field_text, "Q or Fp:<p>");

    auto* beval = app.add_subcommand("blow-eval", "divisorial value of a polynomial");
    beval->add_option("--seq", seq_file, "sequence file")->required();
    beval->add_option("--poly", poly, "polynomial")->required();

    auto* desc = app.add_subcommand("descent", "multiplicity and exponent along the tangent centers");
    desc->add_option("--poly", poly, "polynomial")->required();
    desc->add_option("--steps", steps, "number of blowups")->check(CLI::NonNegativeNumber);
    desc->add_option("--field", field_text, "Q or Fp:<p>");

    auto* dot = app.add_subcommand("tree-dot", "DOT graph of chains closed under infimum");
    dot->add_option("--chains", chain_files, "comma-separated chain files")->required()->delimiter(',');
    dot->add_option("-o,--output", out_file, "output DOT file");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("val");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            MacLaneChain nu = load_chain(chain_file);
            out << evaluate(nu, parse_poly(poly, nu.field())).to_string() << "\n";
        } else if (*eps) {
            MacLaneChain nu = load_chain(chain_file);
            EpsilonData d = epsilon_data(nu, parse_poly(poly, nu.field()));
            std::string set;
            for (int b : d.I) set += (set.empty() ? "" : ",") + std::to_string(b);
            out << "epsilon=" << d.epsilon.to_string() << " I={" << set << "} b=" << d.b << "\n";
        } else if (*val) {
            MacLaneChain nu = load_chain(chain_file, false);
            auto violations = validate(nu);
            if (violations.empty()) {
                out << "ok\n";
            } else {
                for (const auto& v : violations)
                    out << "entry " << v.index << ": " << errc_name(v.rule) << ": " << v.detail << "\n";
                return 3;
            }
        } else if (*cmp) {
            out << relation_name(compare(load_chain(file_a), load_chain(file_b)).relation) << "\n";
        } else if (*inf) {
            emit(chain_to_json(infimum(load_chain(file_a), load_chain(file_b))), out_file, out);
        } else if (*seg) {
            emit(chain_to_json(segment_point(load_chain(chain_file), Value::parse(t_text))), out_file, out);
        } else if (*to_bl) {
            ChainToBlowups r = chain_to_blowups(load_chain(chain_file), max_steps);
            emit(seq_to_json(r.seq), out_file, out);
            out << "exact=" << (r.exact ? "true" : "false") << "\n";
        } else if (*from_bl) {
            emit(chain_to_json(blowups_to_chain(seq_from_json(read_file(seq_file)))), out_file, out);
        } else if (*cexp) {
            out << first_char_exponent(parse_poly(poly, BaseField::parse(field_text))).to_string() << "\n";
        } else if (*beval) {
            BlowupSeq seq = seq_from_json(read_file(seq_file));
            out << divisorial_value(seq, parse_poly(poly, seq.field)).to_string() << "\n";
        } else if (*desc) {
            Descent d = descent(parse_poly(poly, BaseField::parse(field_text)), steps);
            out << "i mu e center\n";
            for (std::size_t i = 0; i < d.rows.size(); ++i) {
                out << i << " " << d.rows[i].mu << " " << d.rows[i].e.to_string() << " "
                    << (i < d.centers.size() ? step_text(d.centers[i]) : "-") << "\n";
            }
        } else if (*dot) {
            std::vector<MacLaneChain> chains;
            for (const auto& f : chain_files) chains.push_back(load_chain(f));
            emit(tree_dot(chains), out_file, out);
        }
    } catch (const Error& e) {
        err << "val: " << e.what() << "\n";
        return e.code() == Errc::ParseError ? 2 : 3;
    } catch (const std::exception& e) {
        err << "val: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace valtree::cli
