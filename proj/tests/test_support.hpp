#pragma once

// Shared helpers for the test binaries: deterministic random generators for
// polynomials, two-letter strings and trees, an exact big-integer evaluator
// used as the numeric oracle, and a runner for the installed CLI binary.

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "textalg/poly.hpp"
#include "textalg/tree_layout.hpp"

namespace testsupport {

// Raw polynomial: duplicates and zero coefficients allowed, like the output
// of a multiply before cleanup.
inline textalg::poly::Polynomial random_raw_poly(std::mt19937& rng,
                                                 int max_terms = 12) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<std::int64_t> coeff(-99, 99);
    std::uniform_int_distribution<std::int64_t> exp(0, 9);
    textalg::poly::Polynomial p;
    const int n = term_count(rng);
    for (int i = 0; i < n; ++i)
        p.terms.push_back({coeff(rng), exp(rng), exp(rng)});
    return p;
}

// Canonical polynomial: merged, zero-free, sorted.
inline textalg::poly::Polynomial random_canonical_poly(std::mt19937& rng,
                                                       int max_terms = 8) {
    return textalg::poly::simplify_sorted(random_raw_poly(rng, max_terms));
}

inline std::string random_ab_string(std::mt19937& rng, std::size_t min_len,
                                    std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> length(min_len, max_len);
    std::uniform_int_distribution<int> coin(0, 1);
    std::string s(length(rng), 'A');
    for (char& c : s)
        if (coin(rng)) c = 'B';
    return s;
}

inline std::unique_ptr<textalg::tree::TreeNode> random_tree(std::mt19937& rng,
                                                            int max_depth) {
    std::uniform_int_distribution<int> label_len(1, 6);
    std::uniform_int_distribution<int> letter(0, 25);
    std::uniform_int_distribution<int> percent(0, 99);
    auto make_label = [&] {
        std::string label(static_cast<std::size_t>(label_len(rng)), 'a');
        for (char& c : label) c = static_cast<char>('a' + letter(rng));
        return label;
    };
    auto build = [&](auto&& self, int depth_left)
        -> std::unique_ptr<textalg::tree::TreeNode> {
        auto node = std::make_unique<textalg::tree::TreeNode>();
        node->label = make_label();
        if (depth_left > 0 && percent(rng) < 60) {
            node->left = self(self, depth_left - 1);
            node->right = self(self, depth_left - 1);
        }
        return node;
    };
    return build(build, max_depth);
}

// Exact value of a polynomial at integer (x, y); 128-bit so products of the
// generated coefficient/exponent ranges cannot wrap.
inline __int128 evaluate(const textalg::poly::Polynomial& p, std::int64_t x,
                         std::int64_t y) {
    __int128 total = 0;
    for (const textalg::poly::Term& t : p.terms) {
        __int128 value = t.coeff;
        for (std::int64_t i = 0; i < t.xexp; ++i) value *= x;
        for (std::int64_t i = 0; i < t.yexp; ++i) value *= y;
        total += value;
    }
    return total;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the CLI binary with the given argument string and stdin content,
// capturing both output streams and the exit code.
inline CliResult run_cli(const std::string& args,
                         const std::string& input = "") {
    namespace fs = std::filesystem;
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const fs::path in_path = dir / ("textalg_in_" + tag);
    const fs::path out_path = dir / ("textalg_out_" + tag);
    const fs::path err_path = dir / ("textalg_err_" + tag);
    {
        std::ofstream in_file(in_path, std::ios::binary);
        in_file << input;
    }
    const std::string command = std::string(TEXTALG_CLI_PATH) + " " + args +
                                " < " + in_path.string() + " > " +
                                out_path.string() + " 2> " + err_path.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    fs::remove(in_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return result;
}

}  // namespace testsupport
