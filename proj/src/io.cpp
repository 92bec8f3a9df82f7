#include "qip/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qip {

namespace {

void write_row(std::ostream& out, const char* tag, std::span<const long long> row) {
    out << tag;
    for (long long v : row) out << ' ' << v;
    out << '\n';
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("instance parse error at line " + std::to_string(line) + ": " + what);
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line as a token stream; errors name the line.
    std::istringstream next(const std::string& expected) {
        std::string line;
        do {
            if (!std::getline(in_, line)) fail(line_no_ + 1, "missing " + expected);
            ++line_no_;
        } while (line.empty());
        return std::istringstream(line);
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<long long> read_tagged_row(LineReader& reader, const std::string& tag,
                                       std::size_t count) {
    auto ls = reader.next(tag + " row");
    std::string label;
    ls >> label;
    if (label != tag) fail(reader.line_no(), "expected '" + tag + "' row, got '" + label + "'");
    std::vector<long long> row(count);
    for (std::size_t k = 0; k < count; ++k)
        if (!(ls >> row[k]))
            fail(reader.line_no(), tag + " row holds fewer than " + std::to_string(count) + " values");
    long long extra;
    if (ls >> extra) fail(reader.line_no(), tag + " row holds extra values");
    return row;
}

} // namespace

void write_instance(const Instance& inst, std::ostream& out) {
    out << "QIP1 " << (inst.constrained() ? "cqip" : "uqip") << '\n';
    out << inst.n() << ' ' << inst.m() << '\n';
    write_row(out, "u", inst.uppers());
    write_row(out, "d", inst.linear_terms());
    for (int i = 0; i < inst.n(); ++i) write_row(out, "Q", inst.quad_row(i));
    for (int j = 0; j < inst.m(); ++j) write_row(out, "A", inst.weight_row(j));
    if (inst.constrained()) write_row(out, "b", inst.rhs_terms());
}

void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_instance(inst, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Instance read_instance(std::istream& in) {
    LineReader reader(in);

    auto header = reader.next("header");
    std::string magic, kind;
    header >> magic >> kind;
    if (magic != "QIP1") fail(reader.line_no(), "expected 'QIP1' header");
    if (kind != "uqip" && kind != "cqip") fail(reader.line_no(), "kind must be 'uqip' or 'cqip'");

    auto dims = reader.next("dimensions");
    long long n = 0, m = 0;
    if (!(dims >> n >> m)) fail(reader.line_no(), "expected '<n> <m>'");
    if (n < 1) fail(reader.line_no(), "n must be positive");
    if (m < 0) fail(reader.line_no(), "m must be non-negative");
    if ((kind == "uqip") != (m == 0)) fail(reader.line_no(), "kind disagrees with m");

    auto nn = static_cast<std::size_t>(n);
    auto u = read_tagged_row(reader, "u", nn);
    auto d = read_tagged_row(reader, "d", nn);
    std::vector<long long> q;
    q.reserve(nn * (nn + 1) / 2);
    for (long long i = 0; i < n; ++i) {
        auto row = read_tagged_row(reader, "Q", static_cast<std::size_t>(n - i));
        q.insert(q.end(), row.begin(), row.end());
    }
    std::vector<long long> a, b;
    if (m > 0) {
        a.reserve(static_cast<std::size_t>(m) * nn);
        for (long long j = 0; j < m; ++j) {
            auto row = read_tagged_row(reader, "A", nn);
            a.insert(a.end(), row.begin(), row.end());
        }
        b = read_tagged_row(reader, "b", static_cast<std::size_t>(m));
    }

    try {
        return Instance::create(std::move(d), std::move(q), std::move(u), std::move(a), std::move(b));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("instance rejected: ") + e.what());
    }
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in);
}

void write_solution_file(const Solution& sol, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "QIPSOL1\n" << sol.instance_name << '\n' << sol.objective << '\n';
    write_row(out, "x", sol.x);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Solution read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file: " + path);
    std::string magic;
    if (!std::getline(in, magic) || magic != "QIPSOL1")
        throw std::runtime_error("solution parse error: expected 'QIPSOL1' header");
    Solution sol;
    if (!std::getline(in, sol.instance_name) || sol.instance_name.empty())
        throw std::runtime_error("solution parse error: missing instance name");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("solution parse error: missing objective");
    sol.objective = std::stoll(line);
    if (!std::getline(in, line))
        throw std::runtime_error("solution parse error: missing x row");
    std::istringstream xs(line);
    std::string label;
    xs >> label;
    if (label != "x") throw std::runtime_error("solution parse error: expected 'x' row");
    long long v;
    while (xs >> v) sol.x.push_back(v);
    return sol;
}

} // namespace qip
