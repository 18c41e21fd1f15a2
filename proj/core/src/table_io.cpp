#include "fpadic/table_io.hpp"

#include <fstream>
#include <sstream>

namespace fpadic {

namespace {

long pow_long(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

} // namespace

void write_table(std::ostream& os, const Measure& mu, int depth) {
    if (depth < 0) throw Error("negative table depth");
    if (mu.max_level() < depth) {
        throw TableError("measure not evaluable to level " + std::to_string(depth));
    }
    const Context& ctx = mu.context();
    os << ctx.p() << " " << ctx.precision() << " " << depth << " tabulated\n";
    for (int n = 0; n <= depth; ++n) {
        long bases = pow_long(ctx.p(), n);
        for (long a = 0; a < bases; ++a) {
            Scalar v = measure_value(mu, Cylinder(a, n, ctx));
            os << a << " " << n << " " << v.to_rational_string() << "\n";
        }
    }
}

LoadedTable read_table(std::istream& is) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(is, out)) {
            size_t i = out.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (out[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line(line)) throw ParseError("empty table");
    std::istringstream header(line);
    long p = 0;
    int precision = 0, depth = 0;
    std::string kind;
    if (!(header >> p >> precision >> depth >> kind)) {
        throw ParseError("bad table header '" + line + "'");
    }
    if (kind != "tabulated") {
        throw ParseError("unsupported table kind '" + kind + "'");
    }
    if (depth < 0) throw ParseError("negative table depth");
    Context ctx(p, precision);

    std::vector<std::vector<Scalar>> values;
    for (int n = 0; n <= depth; ++n) {
        values.emplace_back(static_cast<size_t>(pow_long(p, n)),
                            Scalar::zero(ctx));
    }
    std::vector<std::vector<bool>> seen;
    for (int n = 0; n <= depth; ++n) {
        seen.emplace_back(values[static_cast<size_t>(n)].size(), false);
    }

    while (next_line(line)) {
        std::istringstream row(line);
        long a = 0;
        int n = 0;
        std::string value;
        if (!(row >> a >> n >> value)) {
            throw ParseError("bad table row '" + line + "'");
        }
        if (n < 0 || n > depth) {
            throw ParseError("row level " + std::to_string(n) +
                             " outside table depth");
        }
        if (a < 0 || a >= static_cast<long>(values[static_cast<size_t>(n)].size())) {
            throw ParseError("row base " + std::to_string(a) +
                             " outside [0, p^n)");
        }
        values[static_cast<size_t>(n)][static_cast<size_t>(a)] =
            parse_scalar(value, ctx);
        seen[static_cast<size_t>(n)][static_cast<size_t>(a)] = true;
    }
    for (int n = 0; n <= depth; ++n) {
        for (size_t a = 0; a < seen[static_cast<size_t>(n)].size(); ++a) {
            if (!seen[static_cast<size_t>(n)][a]) {
                throw ParseError("missing table entry a=" + std::to_string(a) +
                                 " n=" + std::to_string(n));
            }
        }
    }
    return LoadedTable{ctx, depth, Measure::tabulated(std::move(values), ctx)};
}

LoadedTable read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file '" + path + "'");
    return read_table(in);
}

void write_table_file(const std::string& path, const Measure& mu, int depth) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write table file '" + path + "'");
    write_table(out, mu, depth);
}

} // namespace fpadic
