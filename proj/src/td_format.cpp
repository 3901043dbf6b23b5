#include "hadwiger/td_format.hpp"

#include "hadwiger/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hadwiger {

std::string write_td(const TreeDecomposition& td)
{
    int max_bag = 0;
    for (VertexSet bag : td.bags())
        max_bag = std::max(max_bag, bag.size());

    std::ostringstream out;
    out << "s td " << td.node_count() << ' ' << max_bag << ' ' << td.vertex_count() << '\n';
    for (int t = 0; t < td.node_count(); ++t) {
        out << "b " << t + 1;
        for (int v : td.bag(t))
            out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : td.tree().edges())
        out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

namespace {

[[noreturn]] void fail(int line, const std::string& message) { throw Error(Errc::malformed_td, message, line); }

std::vector<long long> read_numbers(std::istringstream& in, int line)
{
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            fail(line, "expected an integer, got '" + token + "'");
        }
        if (used != token.size())
            fail(line, "expected an integer, got '" + token + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

TreeDecomposition read_td(std::string_view text)
{
    std::istringstream lines{std::string(text)};
    std::string raw;
    int line = 0;

    std::optional<int> bag_count;
    int declared_max = 0;
    int vertex_count = 0;
    std::vector<std::optional<VertexSet>> bags;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(lines, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream in(raw);
        std::string head;
        if (!(in >> head) || head == "c")
            continue;

        if (head == "s") {
            std::string kind;
            if (bag_count || !(in >> kind) || kind != "td")
                fail(line, "expected a single 's td' header");
            const auto nums = read_numbers(in, line);
            if (nums.size() != 3 || nums[0] < 1 || nums[1] < 0 || nums[2] < 0)
                fail(line, "header needs positive <bags> and nonnegative <max-bag> <n>");
            if (nums[2] > kMaxVertices)
                fail(line, "more than 64 vertices is not supported");
            bag_count = static_cast<int>(nums[0]);
            declared_max = static_cast<int>(nums[1]);
            vertex_count = static_cast<int>(nums[2]);
            bags.assign(static_cast<std::size_t>(*bag_count), std::nullopt);
            continue;
        }
        if (!bag_count)
            fail(line, "content before the 's td' header");

        if (head == "b") {
            const auto nums = read_numbers(in, line);
            if (nums.empty() || nums[0] < 1 || nums[0] > *bag_count)
                fail(line, "bag id out of range");
            auto& slot = bags[static_cast<std::size_t>(nums[0] - 1)];
            if (slot)
                fail(line, "bag " + std::to_string(nums[0]) + " defined twice");
            VertexSet bag;
            for (std::size_t i = 1; i < nums.size(); ++i) {
                if (nums[i] < 1 || nums[i] > vertex_count)
                    fail(line, "vertex " + std::to_string(nums[i]) + " out of range");
                bag.insert(static_cast<int>(nums[i] - 1));
            }
            slot = bag;
            continue;
        }

        std::istringstream whole(raw);
        const auto nums = read_numbers(whole, line);
        if (nums.size() != 2)
            fail(line, "expected a tree edge '<i> <j>'");
        if (nums[0] < 1 || nums[0] > *bag_count || nums[1] < 1 || nums[1] > *bag_count || nums[0] == nums[1])
            fail(line, "tree edge endpoints out of range");
        edges.emplace_back(static_cast<int>(nums[0] - 1), static_cast<int>(nums[1] - 1));
    }

    if (!bag_count)
        fail(std::max(line, 1), "missing 's td' header");
    const int end_line = std::max(line, 1);
    for (std::size_t t = 0; t < bags.size(); ++t)
        if (!bags[t])
            fail(end_line, "header declares " + std::to_string(*bag_count) + " bags but bag " + std::to_string(t + 1) + " is missing");
    int actual_max = 0;
    for (const auto& bag : bags)
        actual_max = std::max(actual_max, bag->size());
    if (actual_max != declared_max)
        fail(end_line, "header max-bag " + std::to_string(declared_max) + " but largest bag has " + std::to_string(actual_max));
    if (static_cast<int>(edges.size()) != *bag_count - 1)
        fail(end_line, "a tree on " + std::to_string(*bag_count) + " bags needs " + std::to_string(*bag_count - 1) + " edges");

    // Root at bag 1 and orient edges away from it.
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(*bag_count));
    for (const auto& [a, b] : edges) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    std::vector<int> parent(static_cast<std::size_t>(*bag_count), RootedTree::kNoParent);
    std::vector<bool> seen(static_cast<std::size_t>(*bag_count), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int next : adjacent[at])
            if (!seen[next]) {
                seen[next] = true;
                parent[next] = at;
                ++reached;
                stack.push_back(next);
            }
    }
    if (reached != *bag_count)
        fail(end_line, "tree edges do not connect all bags");

    std::vector<VertexSet> plain;
    for (const auto& bag : bags)
        plain.push_back(*bag);
    return {RootedTree(std::move(parent)), std::move(plain), vertex_count};
}

} // namespace hadwiger
