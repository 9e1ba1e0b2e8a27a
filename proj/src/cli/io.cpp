#include "tricon/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tricon {

using nlohmann::json;

const Dims& dims_of(const LoadedState& state)
{
    return std::visit([](const auto& s) -> const Dims& { return s.dims(); }, state);
}

DensityMatrix to_density(const LoadedState& state)
{
    if (const auto* psi = std::get_if<PureState>(&state)) return pure_to_density(*psi);
    return std::get<DensityMatrix>(state);
}

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t q = 0; q < byte && q < text.size(); ++q) {
        if (text[q] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void field_error(std::string_view source, const std::string& field, const std::string& what)
{
    throw ParseError(std::string(source) + ": field '" + field + "': " + what);
}

Complex parse_complex(const json& node, std::string_view source, const std::string& field)
{
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        field_error(source, field, "expected a [re, im] pair of numbers");
    return {node[0].get<double>(), node[1].get<double>()};
}

void append_pair(std::string& out, Complex z)
{
    out += "[";
    out += format_double(z.real());
    out += ", ";
    out += format_double(z.imag());
    out += "]";
}

std::string header(const Dims& d, std::string_view kind)
{
    return "{\n  \"dims\": [" + std::to_string(d.m) + ", " + std::to_string(d.n) + ", " + std::to_string(d.l)
           + "],\n  \"kind\": \"" + std::string(kind) + "\",\n  \"data\": [";
}

} // namespace

LoadedState parse_state(std::string_view text, std::string_view source)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(source) + ": malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1)
                         + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(std::string(source) + ": top level must be an object");

    if (!doc.contains("dims")) field_error(source, "dims", "missing");
    const json& jd = doc["dims"];
    if (!jd.is_array() || jd.size() != 3) field_error(source, "dims", "expected [m, n, l]");
    std::array<int, 3> d{};
    for (int s = 0; s < 3; ++s) {
        if (!jd[s].is_number_integer() || jd[s].get<long long>() < 1 || jd[s].get<long long>() > 4096)
            field_error(source, "dims[" + std::to_string(s) + "]", "expected a positive integer");
        d[s] = jd[s].get<int>();
    }
    const Dims dims{d[0], d[1], d[2]};
    const int total = dims.total();

    if (!doc.contains("kind") || !doc["kind"].is_string()) field_error(source, "kind", "expected \"pure\" or \"mixed\"");
    const std::string kind = doc["kind"].get<std::string>();
    if (!doc.contains("data") || !doc["data"].is_array()) field_error(source, "data", "expected an array");
    const json& data = doc["data"];

    try {
        if (kind == "pure") {
            if (int(data.size()) != total)
                field_error(source, "data", "expected " + std::to_string(total) + " entries for dims " + dims.to_string()
                                                + ", got " + std::to_string(data.size()));
            ComplexVector v(total);
            for (int q = 0; q < total; ++q) v(q) = parse_complex(data[q], source, "data[" + std::to_string(q) + "]");
            PureState psi(dims, v);
            psi.require_normalized(std::string(source));
            return psi;
        }
        if (kind == "mixed") {
            if (int(data.size()) != total)
                field_error(source, "data", "expected " + std::to_string(total) + " rows, got " + std::to_string(data.size()));
            ComplexMatrix m(total, total);
            for (int r = 0; r < total; ++r) {
                const json& row = data[r];
                const std::string rf = "data[" + std::to_string(r) + "]";
                if (!row.is_array() || int(row.size()) != total)
                    field_error(source, rf, "expected a row of " + std::to_string(total) + " entries");
                for (int c = 0; c < total; ++c) m(r, c) = parse_complex(row[c], source, rf + "[" + std::to_string(c) + "]");
            }
            return DensityMatrix(dims, m);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(source) + ": invalid state: " + e.what());
    }
    field_error(source, "kind", "expected \"pure\" or \"mixed\", got \"" + kind + "\"");
}

LoadedState read_state(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open state file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), path.string());
}

std::string serialize_state(const PureState& psi)
{
    std::string out = header(psi.dims(), "pure");
    const ComplexVector& v = psi.coeffs();
    for (Eigen::Index q = 0; q < v.size(); ++q) {
        out += q == 0 ? "\n    " : ",\n    ";
        append_pair(out, v(q));
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string serialize_state(const DensityMatrix& rho)
{
    std::string out = header(rho.dims(), "mixed");
    const ComplexMatrix& m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "\n    [" : ",\n    [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            append_pair(out, m(r, c));
        }
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

void write_state(const std::filesystem::path& path, const LoadedState& state)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << std::visit([](const auto& s) { return serialize_state(s); }, state);
}

std::string report_to_json(const BoundReport& report, const Dims& dims)
{
    json doc;
    doc["method"] = std::string(to_string(report.method));
    doc["key"] = report.key();
    doc["dims"] = {dims.m, dims.n, dims.l};
    doc["value"] = report.value;
    doc["coefficient"] = report.coefficient.to_string();
    json params;
    if (report.params.s > 0) params["s"] = report.params.s;
    if (report.method == BoundMethod::tau_lmn) params["shape"] = report.params.shape;
    if (report.method != BoundMethod::convex_combo && report.method != BoundMethod::g2)
        params["inner"] = std::string(to_string(report.params.inner));
    if (!report.params.weights.empty()) {
        json w = json::object();
        for (const auto& [key, value] : report.params.weights) w[key] = value;
        params["weights"] = w;
    }
    doc["params"] = params.is_null() ? json::object() : params;
    json contributions = json::array();
    for (const Contribution& c : report.contributions) {
        contributions.push_back({{"selector", {c.selector.keep[0], c.selector.keep[1], c.selector.keep[2]}},
                                 {"trace", c.trace},
                                 {"value", c.value}});
    }
    doc["contributions"] = contributions;
    return doc.dump(2) + "\n";
}

void print_report(std::ostream& out, const BoundReport& report)
{
    out << "method      " << to_string(report.method) << " (" << report.key() << ")\n";
    out << "bound C^2 >= " << format_double(report.value) << "\n";
    if (report.method == BoundMethod::tau_sss || report.method == BoundMethod::tau_lmn
        || report.method == BoundMethod::operational_222) {
        std::size_t nonzero = 0;
        for (const Contribution& c : report.contributions) nonzero += c.value > 0.0;
        out << "coefficient " << report.coefficient.to_string() << "\n";
        out << "substates   " << report.contributions.size() << " (" << nonzero << " contributing)\n";
    }
    for (const auto& [key, w] : report.params.weights) out << "weight      " << key << " = " << format_double(w) << "\n";
}

} // namespace tricon
