#include "cubelike/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cubelike {

namespace {

// Splits on blanks, empty tokens dropped.
std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

int parse_nat(const std::string& tok, int lineno, const char* what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (...) {
        throw ParseError(lineno, std::string("malformed ") + what + " \"" + tok + "\"");
    }
    if (used != tok.size() || v < 0)
        throw ParseError(lineno, std::string("malformed ") + what + " \"" + tok + "\"");
    return v;
}

ConnectionSet finish(int dim, std::vector<uint32_t> elems, bool keep_order,
                     int lineno) {
    // distinctness / nonzeroness get friendlier, line-tagged wording here
    std::vector<uint32_t> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0)
        throw ParseError(lineno, "zero column (elements must be nonzero)");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(lineno,
                         "duplicate column (projectivity: elements must be distinct)");
    if (elems.empty()) throw ParseError(lineno, "empty connection set");
    return ConnectionSet::make(dim, std::move(elems), keep_order);
}

ConnectionSet parse_matrix(std::istream& in, bool keep_order) {
    std::string line;
    int lineno = 0;
    int d = -1, m = -1;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        const std::vector<std::string> toks = tokens(line);
        if (d < 0) {
            if (toks.size() != 2)
                throw ParseError(lineno, "expected header \"d m\"");
            d = parse_nat(toks[0], lineno, "dimension");
            m = parse_nat(toks[1], lineno, "column count");
            if (d < 1 || d > kMaxWalkDim)
                throw ParseError(lineno, "dimension must be in [1, 24]");
            if (m < 1)
                throw ParseError(lineno, "column count must be >= 1");
            continue;
        }
        if (static_cast<int>(rows.size()) == d)
            throw ParseError(lineno, "extra data after the last matrix row");
        if (static_cast<int>(toks.size()) != m)
            throw ParseError(lineno, "expected " + std::to_string(m) + " bits, got " +
                                         std::to_string(toks.size()));
        std::vector<int> row(m);
        for (int j = 0; j < m; ++j) {
            if (toks[j] != "0" && toks[j] != "1")
                throw ParseError(lineno, "matrix entries must be 0 or 1");
            row[j] = toks[j] == "1";
        }
        rows.push_back(std::move(row));
    }
    if (d < 0) throw ParseError(lineno, "missing header \"d m\"");
    if (static_cast<int>(rows.size()) != d)
        throw ParseError(lineno, "expected " + std::to_string(d) + " matrix rows, got " +
                                     std::to_string(rows.size()));
    std::vector<uint32_t> elems(m, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < m; ++j)
            if (rows[i][j]) elems[j] |= uint32_t{1} << i;
    return finish(d, std::move(elems), keep_order, lineno);
}

ConnectionSet parse_set(std::istream& in, bool keep_order) {
    std::string line;
    int lineno = 0;
    int d = -1;
    std::vector<uint32_t> elems;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        const std::vector<std::string> toks = tokens(line);
        if (toks.size() != 1)
            throw ParseError(lineno, "expected one bit string per line");
        const std::string& s = toks[0];
        if (d < 0) {
            d = static_cast<int>(s.size());
            if (d < 1 || d > kMaxWalkDim)
                throw ParseError(lineno, "bit-string length must be in [1, 24]");
        } else if (static_cast<int>(s.size()) != d) {
            throw ParseError(lineno, "inconsistent bit-string length");
        }
        uint32_t bits = 0;
        for (int i = 0; i < d; ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw ParseError(lineno, "bit strings must contain only 0 and 1");
            // leftmost character = coordinate 1 = least significant bit
            if (s[i] == '1') bits |= uint32_t{1} << i;
        }
        elems.push_back(bits);
    }
    if (d < 0) throw ParseError(lineno, "no elements in input");
    return finish(d, std::move(elems), keep_order, lineno);
}

}  // namespace

ConnectionSet parse_connection_set(std::istream& in, FileFormat format,
                                   bool keep_order) {
    return format == FileFormat::matrix ? parse_matrix(in, keep_order)
                                        : parse_set(in, keep_order);
}

ConnectionSet load_connection_set(const std::string& path, FileFormat format,
                                  bool keep_order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_connection_set(in, format, keep_order);
}

void print_connection_set(std::ostream& out, const ConnectionSet& C,
                          FileFormat format) {
    if (format == FileFormat::matrix) {
        out << C.dim << ' ' << C.m() << '\n';
        for (int i = 0; i < C.dim; ++i) {
            for (int j = 0; j < C.m(); ++j) {
                if (j) out << ' ';
                out << ((C.elems[j] >> i) & 1);
            }
            out << '\n';
        }
    } else {
        for (int j = 0; j < C.m(); ++j)
            out << bit_string(C.element(j)) << '\n';
    }
}

std::string bit_string(const BitVec& v) {
    std::string s(v.dim, '0');
    for (int i = 0; i < v.dim; ++i)
        if ((v.bits >> i) & 1) s[i] = '1';
    return s;
}

BitVec parse_bit_string(const std::string& s, int expected_dim) {
    if (expected_dim > 0 && static_cast<int>(s.size()) != expected_dim)
        throw std::invalid_argument("bit string \"" + s + "\" should have length " +
                                    std::to_string(expected_dim));
    if (s.empty() || s.size() > kMaxCodeDim)
        throw std::invalid_argument("bit string length must be in [1, 32]");
    uint32_t bits = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("bit strings must contain only 0 and 1");
        if (s[i] == '1') bits |= uint32_t{1} << i;
    }
    return BitVec(static_cast<int>(s.size()), bits);
}

Report analyze(const ConnectionSet& C, double tol) {
    Report r;
    r.input = C;
    r.tolerance = tol == 0.0 ? default_tolerance(C.dim) : tol;
    r.profile = classify(C);
    r.spec = spectrum(C);
    r.pst = detect_pst(C, r.tolerance);
    r.period = min_period(C, r.tolerance);
    return r;
}

std::string float_repr(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string time_string(const RationalPi& t) {
    if (t.q == 1) return std::to_string(t.p) + "·π";
    return std::to_string(t.p) + "/" + std::to_string(t.q) + "·π";
}

namespace {

// Tiny push-only JSON writer with fixed key order; strings we emit
// never need escaping beyond the basics.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }

    void begin_object() { comma(); out_ += '{'; fresh_ = true; }
    void end_object() { out_ += '}'; fresh_ = false; }
    void begin_array() { comma(); out_ += '['; fresh_ = true; }
    void end_array() { out_ += ']'; fresh_ = false; }

    void key(const char* k) {
        comma();
        string_raw(k);
        out_ += ':';
        fresh_ = true;
    }
    void value(const std::string& s) { comma(); string_raw(s.c_str()); }
    void value(const char* s) { comma(); string_raw(s); }
    void value_int(int64_t v) { comma(); out_ += std::to_string(v); }
    void value_uint(uint64_t v) { comma(); out_ += std::to_string(v); }
    void value_float(double v) { comma(); out_ += float_repr(v); }
    void value_bool(bool b) { comma(); out_ += b ? "true" : "false"; }
    void value_null() { comma(); out_ += "null"; }

private:
    void comma() {
        if (!fresh_) out_ += ',';
        fresh_ = false;
    }
    void string_raw(const char* s) {
        out_ += '"';
        for (const char* p = s; *p; ++p) {
            switch (*p) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                default: out_ += *p;
            }
        }
        out_ += '"';
    }

    std::string out_;
    bool fresh_ = true;
};

const char* certification_name(Certification c) {
    switch (c) {
        case Certification::theorem: return "theorem";
        case Certification::numeric: return "numeric";
        case Certification::both: return "both";
    }
    return "?";
}

}  // namespace

std::string report_json(const Report& r) {
    JsonWriter w;
    w.begin_object();

    w.key("input");
    w.begin_object();
    w.key("dim");
    w.value_int(r.input.dim);
    w.key("m");
    w.value_int(r.input.m());
    w.key("valency");
    w.value_int(r.input.m());
    w.key("elements");
    w.begin_array();
    for (int j = 0; j < r.input.m(); ++j) w.value(bit_string(r.input.element(j)));
    w.end_array();
    w.end_object();

    w.key("profile");
    w.begin_object();
    w.key("divisor");
    w.value_int(r.profile.divisor);
    w.key("row_gcd");
    w.value_int(r.profile.row_gcd);
    w.key("center");
    w.value(bit_string(r.profile.center));
    w.key("center_vertex");
    w.value_uint(r.profile.center.bits);
    w.key("sigma");
    w.value(bit_string(r.profile.sigma));
    w.key("sigma_vertex");
    w.value_uint(r.profile.sigma.bits);
    w.key("even");
    w.value_bool(r.profile.even);
    w.key("doubly_even");
    w.value_bool(r.profile.doubly_even);
    w.key("self_orthogonal");
    w.value_bool(r.profile.self_orthogonal);
    w.key("spanning");
    w.value_bool(r.profile.spanning);
    w.end_object();

    w.key("spectrum");
    w.begin_array();
    for (const auto& [lambda, mult] : r.spec.entries) {
        w.begin_object();
        w.key("eigenvalue");
        w.value_int(lambda);
        w.key("multiplicity");
        w.value_uint(mult);
        w.end_object();
    }
    w.end_array();

    w.key("pst");
    w.begin_object();
    w.key("occurs");
    w.value_bool(r.pst.occurs);
    w.key("time");
    w.value(time_string(r.pst.time));
    w.key("target");
    if (r.pst.target)
        w.value(bit_string(*r.pst.target));
    else
        w.value_null();
    w.key("target_vertex");
    if (r.pst.target)
        w.value_uint(r.pst.target->bits);
    else
        w.value_null();
    w.key("phase_re");
    if (r.pst.phase)
        w.value_float(r.pst.phase->real());
    else
        w.value_null();
    w.key("phase_im");
    if (r.pst.phase)
        w.value_float(r.pst.phase->imag());
    else
        w.value_null();
    w.key("certified_by");
    w.value(certification_name(r.pst.certified_by));
    w.end_object();

    w.key("period");
    w.begin_object();
    w.key("period");
    w.value(time_string(r.period.period));
    w.key("alpha_re");
    w.value_float(r.period.alpha.real());
    w.key("alpha_im");
    w.value_float(r.period.alpha.imag());
    w.end_object();

    w.key("tolerance");
    w.value_float(r.tolerance);

    w.end_object();
    std::string s = w.take();
    s += '\n';
    return s;
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    out << "graph: dim " << r.input.dim << ", valency " << r.input.m() << "\n";
    out << "profile: divisor " << r.profile.divisor << ", row gcd "
        << r.profile.row_gcd << ", center " << bit_string(r.profile.center)
        << " (vertex " << r.profile.center.bits << "), sigma "
        << bit_string(r.profile.sigma) << " (vertex " << r.profile.sigma.bits
        << ")\n";
    out << "flags:";
    out << (r.profile.even ? " even" : " odd-divisor");
    if (r.profile.doubly_even) out << " doubly-even";
    if (r.profile.self_orthogonal) out << " self-orthogonal";
    out << (r.profile.spanning ? " spanning" : " non-spanning") << "\n";
    out << "spectrum:";
    for (const auto& [lambda, mult] : r.spec.entries)
        out << ' ' << lambda << "(x" << mult << ")";
    out << "\n";
    if (r.pst.occurs) {
        out << "pst: occurs at t = " << time_string(r.pst.time) << " to "
            << bit_string(*r.pst.target) << " (vertex " << r.pst.target->bits
            << "), certified by " << certification_name(r.pst.certified_by);
        if (r.pst.phase)
            out << ", phase " << float_repr(r.pst.phase->real()) << " + "
                << float_repr(r.pst.phase->imag()) << "i";
        out << "\n";
    } else {
        out << "pst: none (candidate time " << time_string(r.pst.time) << ")\n";
    }
    out << "period: " << time_string(r.period.period) << ", alpha "
        << float_repr(r.period.alpha.real()) << " + "
        << float_repr(r.period.alpha.imag()) << "i\n";
    return out.str();
}

}  // namespace cubelike
