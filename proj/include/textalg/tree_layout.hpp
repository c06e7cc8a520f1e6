#pragma once

// ASCII layout for labeled binary trees read from s-expressions. Every
// subtree gets a width triple (esq, mid, dir): columns left of the label,
// the label region, columns right of it. Two combine rules are provided:
// the baseline rule stacks children side by side and reserves the parent
// label's own columns between them, the compact rule overlaps the parent
// label with its children's outer regions. Rendering places labels on even
// rows and connector bars on the odd rows between them.

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "textalg/errors.hpp"

namespace textalg::tree {

// Leaves have no children; internal nodes always have exactly two.
struct TreeNode {
    std::string label;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    bool is_leaf() const noexcept { return left == nullptr; }
};

namespace detail {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

struct SexprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    }

    std::string parse_label() {
        if (pos >= text.size())
            throw parse_error("expected a label, found end of input", pos);
        if (text[pos] == '(' || text[pos] == ')')
            throw parse_error(std::string("expected a label, found '") +
                                  text[pos] + "'",
                              pos);
        const std::size_t start = pos;
        while (pos < text.size() && !is_space(text[pos]) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    std::unique_ptr<TreeNode> parse_node() {
        skip_space();
        if (pos >= text.size())
            throw parse_error("expected a node, found end of input", pos);
        if (text[pos] == ')') throw parse_error("unexpected ')'", pos);
        if (text[pos] != '(') {
            auto leaf = std::make_unique<TreeNode>();
            leaf->label = parse_label();
            return leaf;
        }
        const std::size_t open = pos;
        ++pos;
        skip_space();
        std::string label = parse_label();
        std::vector<std::unique_ptr<TreeNode>> children;
        while (true) {
            skip_space();
            if (pos >= text.size())
                throw parse_error("missing ')' for this '('", open);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            children.push_back(parse_node());
        }
        if (children.size() != 2)
            throw parse_error("node '" + label +
                                  "' must have exactly 2 children, found " +
                                  std::to_string(children.size()),
                              open);
        auto node = std::make_unique<TreeNode>();
        node->label = std::move(label);
        node->left = std::move(children[0]);
        node->right = std::move(children[1]);
        return node;
    }
};

}  // namespace detail

// Parses "(label child child)" with atoms as leaves. Labels are any run of
// characters other than whitespace and parentheses. Whitespace between
// tokens is free-form; the whole input must be one expression.
inline std::unique_ptr<TreeNode> parse_tree_sexpr(std::string_view text) {
    detail::SexprParser parser{text};
    auto root = parser.parse_node();
    parser.skip_space();
    if (parser.pos != text.size())
        throw parse_error("trailing input after the expression", parser.pos);
    return root;
}

// (esq, mid, dir): column counts left of, inside, and right of the label
// region of a subtree. The subtree occupies total() consecutive columns.
struct WidthTriple {
    int esq = 0;
    int mid = 0;
    int dir = 0;

    int total() const noexcept { return esq + mid + dir; }

    friend bool operator==(const WidthTriple&, const WidthTriple&) = default;
};

// Where one node ended up: its grid row (2 * depth), the first column of
// its subtree interval, its width triple under the active combine rule, the
// column its label starts in, and, for internal nodes, the connector bar.
struct NodeGeometry {
    int row = 0;
    int offset = 0;
    WidthTriple triple;
    int label_start_col = 0;
    int bar_row = -1;        // -1 on leaves
    int bar_left_col = -1;
    int bar_right_col = -1;
};

struct Layout {
    std::unordered_map<const TreeNode*, NodeGeometry> nodes;
    int total_width = 0;
    int max_depth = 0;

    const NodeGeometry& at(const TreeNode& node) const {
        return nodes.at(&node);
    }
};

// Scalar width of a subtree: labels of all nodes plus nothing else. Equals
// the width triple total under the baseline combine rule.
inline int subtree_width(const TreeNode& node) {
    if (node.is_leaf()) return static_cast<int>(node.label.size());
    return subtree_width(*node.left) + static_cast<int>(node.label.size()) +
           subtree_width(*node.right);
}

namespace detail {

inline int label_size(const TreeNode& node) {
    return static_cast<int>(node.label.size());
}

inline WidthTriple baseline_triples(const TreeNode& node, int depth,
                                    Layout& out) {
    out.max_depth = std::max(out.max_depth, depth);
    NodeGeometry geom;
    geom.row = 2 * depth;
    if (node.is_leaf()) {
        geom.triple = WidthTriple{0, label_size(node), 0};
    } else {
        const WidthTriple lt = baseline_triples(*node.left, depth + 1, out);
        const WidthTriple rt = baseline_triples(*node.right, depth + 1, out);
        geom.triple = WidthTriple{lt.total(), label_size(node), rt.total()};
    }
    out.nodes.emplace(&node, geom);
    return geom.triple;
}

inline void baseline_place(const TreeNode& node, int offset, Layout& out) {
    NodeGeometry& geom = out.nodes.at(&node);
    geom.offset = offset;
    geom.label_start_col = offset + geom.triple.esq;
    if (node.is_leaf()) return;
    const WidthTriple& lt = out.nodes.at(node.left.get()).triple;
    const WidthTriple& rt = out.nodes.at(node.right.get()).triple;
    geom.bar_row = geom.row + 1;
    // Bars end above the centers of the children's label regions. The right
    // child starts after the left subtree and the parent's own label.
    geom.bar_left_col = offset + lt.esq + lt.mid / 2;
    geom.bar_right_col =
        offset + lt.total() + label_size(node) + rt.esq + rt.mid / 2;
    baseline_place(*node.left, offset, out);
    baseline_place(*node.right, offset + geom.triple.esq + geom.triple.mid,
                   out);
}

}  // namespace detail

// Baseline rule: a parent's esq is the whole left subtree, mid is its own
// label, dir is the whole right subtree, so every label gets disjoint
// columns and the total width equals subtree_width.
inline Layout compute_layout_baseline(const TreeNode& root) {
    Layout out;
    detail::baseline_triples(root, 0, out);
    out.total_width = out.at(root).triple.total();
    detail::baseline_place(root, 0, out);
    return out;
}

// Compact rule: the parent's mid region spans from the center of the left
// child's label region to the center of the right child's (widened to the
// label if that is longer); the children's outer halves become the parent's
// esq and dir. Children keep at least one blank column between them.
inline WidthTriple combine_compact(const WidthTriple& left,
                                   const WidthTriple& right, int label_size) {
    const int between = (left.mid + 1) / 2 + left.dir + 1 + right.esq +
                        right.mid / 2;
    return WidthTriple{left.esq + left.mid / 2,
                       std::max(between, label_size),
                       (right.mid + 1) / 2 + right.dir};
}

namespace detail {

inline WidthTriple compact_triples(const TreeNode& node, int depth,
                                   Layout& out) {
    out.max_depth = std::max(out.max_depth, depth);
    NodeGeometry geom;
    geom.row = 2 * depth;
    if (node.is_leaf()) {
        geom.triple = WidthTriple{0, label_size(node), 0};
    } else {
        const WidthTriple lt = compact_triples(*node.left, depth + 1, out);
        const WidthTriple rt = compact_triples(*node.right, depth + 1, out);
        geom.triple = combine_compact(lt, rt, label_size(node));
    }
    out.nodes.emplace(&node, geom);
    return geom.triple;
}

inline void compact_place(const TreeNode& node, int offset, Layout& out) {
    NodeGeometry& geom = out.nodes.at(&node);
    geom.offset = offset;
    const int mid_start = offset + geom.triple.esq;
    // Center the label in the mid region, rounding left; on a leaf the mid
    // region is exactly the label, so this is just mid_start.
    geom.label_start_col =
        mid_start + (geom.triple.mid + 1 - label_size(node)) / 2;
    if (node.is_leaf()) return;
    geom.bar_row = geom.row + 1;
    geom.bar_left_col = mid_start;
    geom.bar_right_col = mid_start + geom.triple.mid;
    // Left child sits flush left, right child flush right; any slack the
    // parent label forced into mid stays between them.
    compact_place(*node.left, offset, out);
    const int right_width = out.nodes.at(node.right.get()).triple.total();
    compact_place(*node.right, offset + geom.triple.total() - right_width,
                  out);
}

}  // namespace detail

inline Layout compute_layout_compact(const TreeNode& root) {
    Layout out;
    detail::compact_triples(root, 0, out);
    out.total_width = out.at(root).triple.total();
    detail::compact_place(root, 0, out);
    return out;
}

// The columns of the connector bar under an internal node: the bar runs
// from above the left child's label center to above the right child's.
inline std::pair<int, int> bar_endpoints(const Layout& layout,
                                         const TreeNode& node) {
    if (node.is_leaf())
        throw std::invalid_argument(
            "bar_endpoints: leaf nodes have no connector bar");
    const NodeGeometry& geom = layout.at(node);
    return {geom.bar_left_col, geom.bar_right_col};
}

// Space-filled character grid that refuses conflicting writes: a cell may
// be written any number of times, but always with the same glyph.
class TextCanvas {
public:
    TextCanvas(int width, int height)
        : width_(width),
          height_(height),
          rows_(static_cast<std::size_t>(height),
                std::string(static_cast<std::size_t>(width), ' ')) {}

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    char at(int row, int col) const {
        return rows_.at(static_cast<std::size_t>(row))
            .at(static_cast<std::size_t>(col));
    }

    void put(int row, int col, char glyph) {
        char& cell = rows_.at(static_cast<std::size_t>(row))
                         .at(static_cast<std::size_t>(col));
        if (cell != ' ' && cell != glyph)
            throw std::logic_error("canvas cell (" + std::to_string(row) +
                                   ", " + std::to_string(col) +
                                   ") written with conflicting glyphs");
        cell = glyph;
    }

    void put(int row, int col, std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            put(row, col + static_cast<int>(i), text[i]);
    }

    // Rows with trailing blanks removed.
    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        out.reserve(rows_.size());
        for (const std::string& row : rows_) {
            std::string trimmed = row;
            while (!trimmed.empty() && trimmed.back() == ' ')
                trimmed.pop_back();
            out.push_back(std::move(trimmed));
        }
        return out;
    }

    std::string str() const {
        std::string out;
        for (const std::string& line : lines()) {
            out += line;
            out += '\n';
        }
        return out;
    }

private:
    int width_;
    int height_;
    std::vector<std::string> rows_;
};

// Draws the laid-out tree. With bars, labels go on row 2 * depth and each
// internal node's bar on the row below it, '|' at both ends and '-'
// between, so the grid has 2 * max_depth + 1 rows. Without bars the label
// rows close up to consecutive rows (depth d on row d).
inline TextCanvas render(const Layout& layout, const TreeNode& root,
                         bool with_bars) {
    const int height =
        with_bars ? 2 * layout.max_depth + 1 : layout.max_depth + 1;
    TextCanvas canvas(layout.total_width, height);
    auto paint = [&](auto&& self, const TreeNode& node) -> void {
        const NodeGeometry& geom = layout.at(node);
        const int label_row = with_bars ? geom.row : geom.row / 2;
        canvas.put(label_row, geom.label_start_col, node.label);
        if (!node.is_leaf()) {
            if (with_bars) {
                canvas.put(geom.bar_row, geom.bar_left_col, '|');
                canvas.put(geom.bar_row, geom.bar_right_col, '|');
                for (int col = geom.bar_left_col + 1;
                     col < geom.bar_right_col; ++col)
                    canvas.put(geom.bar_row, col, '-');
            }
            self(self, *node.left);
            self(self, *node.right);
        }
    };
    paint(paint, root);
    return canvas;
}

}  // namespace textalg::tree
