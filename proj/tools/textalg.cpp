// textalg: polynomial products, occurrence counts in recursive two-letter
// strings, and ASCII drawings of binary trees. One subcommand per engine;
// results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 malformed input, 2 usage or bounds error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "textalg/fib_string.hpp"
#include "textalg/poly.hpp"
#include "textalg/tree_layout.hpp"

namespace {

// 1-based line and column of a byte offset within text.
std::pair<long, long> line_and_column(const std::string& text,
                                      std::size_t offset) {
    long line = 1;
    long column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

int run_polymul(std::istream& in, bool sorted_strategy) {
    using namespace textalg::poly;
    std::string first;
    long line_no = 0;
    while (std::getline(in, first)) {
        const long first_no = ++line_no;
        std::string second;
        if (!std::getline(in, second)) {
            std::cerr << "textalg polymul: line " << first_no
                      << " has no partner line (input must be pairs)\n";
            return 1;
        }
        const long second_no = ++line_no;
        auto parse_line = [](const std::string& text, long no) {
            try {
                return parse_polynomial(text);
            } catch (const textalg::parse_error& e) {
                std::cerr << "textalg polymul: line " << no << ", column "
                          << e.position() + 1 << ": " << e.what() << '\n';
                throw;
            }
        };
        try {
            const Polynomial a = parse_line(first, first_no);
            const Polynomial b = parse_line(second, second_no);
            const Polynomial raw = multiply(a, b);
            const Polynomial canonical =
                sorted_strategy ? simplify_sorted(raw) : simplify_unsorted(raw);
            const TwoLineText text = render_two_line(canonical);
            std::cout << text.exponents << '\n' << text.base << '\n';
        } catch (const textalg::parse_error&) {
            return 1;  // already reported
        } catch (const std::overflow_error& e) {
            std::cerr << "textalg polymul: lines " << first_no << "-"
                      << second_no << ": " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}

int run_fibcount(const std::string& pattern, int n, const std::string& mode) {
    using namespace textalg::fib;
    if (pattern.empty() ||
        pattern.size() > static_cast<std::size_t>(kMaxPatternLength) ||
        n < 0 || n > kMaxIndex) {
        std::cerr << "textalg fibcount: pattern must be 1.."
                  << kMaxPatternLength << " characters and n must be 0.."
                  << kMaxIndex << '\n';
        return 2;
    }
    try {
        const FibQuery query{pattern, n};
        std::uint64_t count = 0;
        if (mode == "algebraic")
            count = count_occurrences(query);
        else if (mode == "stream")
            count = stream_count(query);
        else
            count = scan_count(build_explicit(n), pattern);
        std::cout << count << '\n';
        return 0;
    } catch (const std::length_error& e) {
        std::cerr << "textalg fibcount: " << e.what() << '\n';
        return 2;
    }
}

int run_treedraw(std::istream& in, bool compact, bool with_bars) {
    using namespace textalg::tree;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        const std::unique_ptr<TreeNode> root = parse_tree_sexpr(text);
        const Layout layout = compact ? compute_layout_compact(*root)
                                      : compute_layout_baseline(*root);
        std::cout << render(layout, *root, with_bars).str();
        return 0;
    } catch (const textalg::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.position());
        std::cerr << "textalg treedraw: line " << line << ", column " << column
                  << ": " << e.what() << '\n';
        return 1;
    }
}

// Runs fn on the named file, or on stdin when the path is empty.
template <typename Fn>
int with_input(const std::string& path, Fn&& fn) {
    if (path.empty()) return fn(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "textalg: cannot open '" << path << "'\n";
        return 1;
    }
    return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polynomial products, occurrence counts in recursive strings, "
        "and binary tree drawings"};
    app.require_subcommand(1);

    std::string poly_path;
    std::string strategy = "sorted";
    CLI::App* polymul = app.add_subcommand(
        "polymul",
        "multiply bivariate polynomials read as pairs of input lines");
    polymul->add_option("input", poly_path, "input file (default: stdin)");
    polymul
        ->add_option("--strategy", strategy,
                     "cleanup strategy: sorted or unsorted (default sorted)")
        ->check(CLI::IsMember({"sorted", "unsorted"}));

    std::string pattern;
    int index_n = 0;
    std::string mode = "algebraic";
    CLI::App* fibcount = app.add_subcommand(
        "fibcount", "count occurrences of PATTERN in the n-th recursive "
                    "two-letter string");
    fibcount->add_option("pattern", pattern, "pattern to count")->required();
    fibcount->add_option("n", index_n, "string index, 0..50")->required();
    fibcount
        ->add_option("--mode", mode,
                     "algebraic, stream or naive (default algebraic)")
        ->check(CLI::IsMember({"algebraic", "stream", "naive"}));

    std::string tree_path;
    std::string layout = "baseline";
    bool no_bars = false;
    CLI::App* treedraw = app.add_subcommand(
        "treedraw", "draw the binary tree of an s-expression");
    treedraw->add_option("input", tree_path, "input file (default: stdin)");
    treedraw
        ->add_option("--layout", layout,
                     "baseline or compact (default baseline)")
        ->check(CLI::IsMember({"baseline", "compact"}));
    treedraw->add_flag("--no-bars", no_bars,
                       "print only the label rows, no connector bars");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    try {
        if (polymul->parsed())
            return with_input(poly_path, [&](std::istream& in) {
                return run_polymul(in, strategy == "sorted");
            });
        if (fibcount->parsed()) return run_fibcount(pattern, index_n, mode);
        return with_input(tree_path, [&](std::istream& in) {
            return run_treedraw(in, layout == "compact", !no_bars);
        });
    } catch (const std::exception& e) {
        std::cerr << "textalg: " << e.what() << '\n';
        return 1;
    }
}
