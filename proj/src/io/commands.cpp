#include "setcalc/io/commands.hpp"

#include "setcalc/approximation.hpp"
#include "setcalc/concrete_ops.hpp"
#include "setcalc/io/document.hpp"
#include "setcalc/io/svg.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace setcalc::io {

namespace {

struct Options {
    std::vector<std::string> docs;
    std::string dir;
    bool want_vector = false;
    std::string mode = "exact";
    std::string templ;
    double eps = 0.0;
    std::string out;
    std::string format;
    std::string relation;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot read file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Inline JSON when the value starts with '{' or '[', a file path otherwise.
std::string doc_text(const std::string& value) {
    const auto first = value.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) {
        return value;
    }
    return read_file(value);
}

double parse_double(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) {
        ++end;
    }
    if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
        throw InvalidArgument("invalid number \"" + text + "\" in " + what);
    }
    return value;
}

Vector parse_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        values.push_back(parse_double(item, what));
    }
    if (values.empty()) {
        throw InvalidArgument(what + " is empty");
    }
    return make_vector(values);
}

std::vector<Vector> read_directions(const std::string& path) {
    std::vector<Vector> dirs;
    std::stringstream lines(read_file(path));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') {
            continue;
        }
        dirs.push_back(parse_list(line, "direction file \"" + path + "\""));
    }
    return dirs;
}

DirectionTemplate parse_template(const std::string& choice, Eigen::Index n) {
    const auto colon = choice.find(':');
    const std::string name = choice.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : choice.substr(colon + 1);
    auto resolution = [&]() {
        const double k = parse_double(arg, "template \"" + choice + "\"");
        if (k != std::floor(k) || k < 1 || k > 1e6) {
            throw InvalidArgument("template resolution must be a positive integer, got \"" + arg + "\"");
        }
        return static_cast<int>(k);
    };
    DirectionTemplate t = [&]() {
        if (name == "box" && arg.empty()) {
            return DirectionTemplate::box(n);
        }
        if (name == "oct" && arg.empty()) {
            return DirectionTemplate::oct(n);
        }
        if (name == "polar") {
            return DirectionTemplate::polar(resolution());
        }
        if (name == "spherical") {
            return DirectionTemplate::spherical(resolution());
        }
        if (name == "custom" && !arg.empty()) {
            return DirectionTemplate::custom(read_directions(arg));
        }
        throw InvalidArgument("unknown template \"" + choice + "\"; expected box, oct, polar:K, spherical:K or custom:FILE");
    }();
    if (t.dim() != n) {
        throw DimensionMismatch("template \"" + choice + "\" has dimension " + std::to_string(t.dim()) +
                                " but the set has dimension " + std::to_string(n));
    }
    return t;
}

std::string csv_row(const Vector& v) {
    std::string row;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        row += (i == 0 ? "" : ",") + format_precise(v[i]);
    }
    return row + "\n";
}

std::string vertices_csv(const std::vector<Vector>& vertices) {
    std::string text;
    for (const auto& v : vertices) {
        text += csv_row(v);
    }
    return text;
}

std::string constraints_csv(const std::vector<HalfSpace>& constraints) {
    std::string text;
    for (const auto& h : constraints) {
        Vector row(h.dim() + 1);
        row << h.normal(), h.offset();
        text += csv_row(row);
    }
    return text;
}

class Emitter {
public:
    Emitter(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

    void write(const std::string& text) const {
        if (path_.empty()) {
            fallback_ << text;
            return;
        }
        std::ofstream file(path_, std::ios::binary);
        if (!file) {
            throw InvalidArgument("cannot write file \"" + path_ + "\"");
        }
        file << text;
    }

private:
    std::string path_;
    std::ostream& fallback_;
};

SetExpr load(const std::string& value) { return parse_document(doc_text(value)); }

void require_docs(const Options& o, std::size_t count, const char* command) {
    if (o.docs.size() != count) {
        throw InvalidArgument(std::string(command) + " needs exactly " + std::to_string(count) + " --doc value(s), got " +
                              std::to_string(o.docs.size()));
    }
}

void cmd_support(const Options& o, std::ostream& out) {
    require_docs(o, 1, "support");
    const SetExpr expr = load(o.docs[0]);
    const Vector d = parse_list(o.dir, "--dir");
    if (d.size() != expr.dim()) {
        throw DimensionMismatch("--dir has dimension " + std::to_string(d.size()) + " but the set has dimension " +
                                std::to_string(expr.dim()));
    }
    if (o.mode != "exact" && o.mode != "overapprox") {
        throw InvalidArgument("--mode must be exact or overapprox");
    }
    const QueryMode mode = o.mode == "exact" ? QueryMode::Exact : QueryMode::Overapproximate;
    const double rho = lazy_support_function(d, expr, mode);
    std::optional<Vector> sigma;
    if (o.want_vector) {
        sigma = lazy_support_vector(d, expr);
    }
    std::string text;
    if (o.format == "json") {
        nlohmann::json j;
        j["kind"] = "scalar";
        j["direction"] = std::vector<double>(d.data(), d.data() + d.size());
        j["rho"] = rho;
        if (sigma) {
            j["vector"] = std::vector<double>(sigma->data(), sigma->data() + sigma->size());
        }
        text = j.dump() + "\n";
    } else if (o.format.empty() || o.format == "csv") {
        text = format_precise(rho) + "\n";
        if (sigma) {
            text += csv_row(*sigma);
        }
    } else {
        throw InvalidArgument("support supports --format csv or json");
    }
    Emitter(o.out, out).write(text);
}

void cmd_overapprox(const Options& o, std::ostream& out) {
    require_docs(o, 1, "overapprox");
    const SetExpr expr = load(o.docs[0]);
    const bool use_eps = o.eps != 0.0;
    if (use_eps == !o.templ.empty()) {
        throw InvalidArgument("overapprox needs exactly one of --template and --eps");
    }
    const std::string format = o.format.empty() ? "csv" : o.format;
    std::string text;
    if (use_eps) {
        const EpsApproximation result = overapproximate_eps_2d(expr, o.eps);
        if (format == "csv") {
            text = vertices_csv(result.polygon.vertices());
        } else if (format == "json") {
            nlohmann::json j = to_json(ConcreteSet(result.polygon));
            j["version"] = std::string(kDocumentVersion);
            j["hausdorff_bound"] = result.error.hausdorff_bound;
            text = j.dump() + "\n";
        } else if (format == "svg") {
            text = render_svg({outline(concretize(expr)), result.polygon.vertices()});
        } else {
            throw InvalidArgument("unknown --format \"" + format + "\"");
        }
    } else {
        const ConcreteSet result = overapproximate_template(expr, parse_template(o.templ, expr.dim()));
        if (format == "csv") {
            text = constraints_csv(constraints_list(result));
        } else if (format == "json") {
            text = serialize(result) + "\n";
        } else if (format == "svg") {
            text = render_svg({outline(concretize(expr)), outline(result)});
        } else {
            throw InvalidArgument("unknown --format \"" + format + "\"");
        }
    }
    Emitter(o.out, out).write(text);
}

void cmd_check(const Options& o, std::ostream& out) {
    require_docs(o, 2, "check");
    const SetExpr a = load(o.docs[0]);
    bool verdict = false;
    if (o.relation == "member") {
        nlohmann::json point;
        try {
            point = nlohmann::json::parse(doc_text(o.docs[1]));
        } catch (const nlohmann::json::parse_error& e) {
            throw DocumentError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
        }
        verdict = lazy_membership(point_from_json(point), a);
    } else {
        const SetExpr b = load(o.docs[1]);
        if (o.relation == "subset") {
            verdict = is_subset(a, b);
        } else if (o.relation == "disjoint") {
            verdict = is_disjoint(a, b);
        } else if (o.relation == "equivalent") {
            verdict = is_equivalent(a, b);
        } else {
            throw InvalidArgument("--relation must be subset, disjoint, equivalent or member");
        }
    }
    Emitter(o.out, out).write(verdict ? "true\n" : "false\n");
}

void cmd_plot(const Options& o, std::ostream& out) {
    if (o.docs.empty()) {
        throw InvalidArgument("plot needs at least one --doc");
    }
    std::vector<std::vector<Vector>> polygons;
    for (const auto& doc : o.docs) {
        polygons.push_back(outline(concretize(load(doc))));
    }
    Emitter(o.out, out).write(render_svg(polygons));
}

void cmd_concretize(const Options& o, std::ostream& out) {
    require_docs(o, 1, "concretize");
    const ConcreteSet set = concretize(load(o.docs[0]));
    const std::string format = o.format.empty() ? "json" : o.format;
    std::string text;
    if (format == "json") {
        text = serialize(set) + "\n";
    } else if (format == "csv") {
        if (dim(set) == 2 && is_bounded(set)) {
            text = vertices_csv(outline(set));
        } else {
            text = constraints_csv(constraints_list(set));
        }
    } else if (format == "svg") {
        text = render_svg({outline(set)});
    } else {
        throw InvalidArgument("unknown --format \"" + format + "\"");
    }
    Emitter(o.out, out).write(text);
}

int report(std::ostream& err, int code, const char* label, const std::string& message) {
    err << "setcalc: " << label << ": " << message << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Set computations over JSON set-expression documents", "setcalc"};
    app.require_subcommand(1);
    Options o;

    auto add_doc = [&](CLI::App* cmd, const char* help) { cmd->add_option("--doc", o.docs, help)->required()->allow_extra_args(false); };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write the result to this file"); };
    auto add_format = [&](CLI::App* cmd, const char* help) { cmd->add_option("--format", o.format, help); };

    CLI::App* support = app.add_subcommand("support", "Support function (and vector) along a direction");
    add_doc(support, "Set document (file or inline JSON)");
    support->add_option("--dir", o.dir, "Direction, comma-separated")->required();
    support->add_flag("--vector", o.want_vector, "Also print a support vector");
    support->add_option("--mode", o.mode, "exact (default) or overapprox");
    add_format(support, "csv (default) or json");
    add_out(support);

    CLI::App* overapprox = app.add_subcommand("overapprox", "Template or epsilon-close outer approximation");
    add_doc(overapprox, "Set document (file or inline JSON)");
    overapprox->add_option("--template", o.templ, "box | oct | polar:K | spherical:K | custom:FILE");
    overapprox->add_option("--eps", o.eps, "Hausdorff tolerance for the 2-D epsilon-close polygon");
    add_format(overapprox, "csv (default), json or svg");
    add_out(overapprox);

    CLI::App* check = app.add_subcommand("check", "Decide a relation between two documents");
    add_doc(check, "Two documents: the set, then the other set (or a point for member)");
    check->add_option("--relation", o.relation, "subset | disjoint | equivalent | member")->required();
    add_out(check);

    CLI::App* plot = app.add_subcommand("plot", "Draw 2-D sets as SVG");
    add_doc(plot, "One or more set documents");
    add_out(plot);

    CLI::App* concretize_cmd = app.add_subcommand("concretize", "Evaluate a lazy expression into a concrete set");
    add_doc(concretize_cmd, "Set document (file or inline JSON)");
    add_format(concretize_cmd, "json (default), csv or svg");
    add_out(concretize_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report(err, kExitBadArguments, "usage", e.what());
    }

    if (o.eps < 0.0 || (overapprox->parsed() && overapprox->count("--eps") > 0 && o.eps == 0.0)) {
        return report(err, kExitBadArguments, "invalid argument", "--eps must be positive");
    }

    try {
        if (support->parsed()) {
            cmd_support(o, out);
        } else if (overapprox->parsed()) {
            cmd_overapprox(o, out);
        } else if (check->parsed()) {
            cmd_check(o, out);
        } else if (plot->parsed()) {
            cmd_plot(o, out);
        } else if (concretize_cmd->parsed()) {
            cmd_concretize(o, out);
        }
    } catch (const UnsupportedOperation& e) {
        return report(err, kExitUnsupported, "unsupported", e.what());
    } catch (const DimensionMismatch& e) {
        return report(err, kExitBadArguments, "dimension mismatch", e.what());
    } catch (const DocumentError& e) {
        return report(err, kExitBadArguments, "bad document", e.what());
    } catch (const InvalidArgument& e) {
        return report(err, kExitBadArguments, "invalid argument", e.what());
    } catch (const EmptySetError& e) {
        return report(err, kExitBadArguments, "empty set", e.what());
    } catch (const UnboundedError& e) {
        return report(err, kExitBadArguments, "unbounded set", e.what());
    } catch (const nlohmann::json::exception& e) {
        return report(err, kExitBadArguments, "bad document", e.what());
    } catch (const std::exception& e) {
        return report(err, kExitInternal, "internal error", e.what());
    }
    return kExitOk;
}

bool apply_environment(std::ostream& err) {
    const char* value = std::getenv("SETCALC_TOLERANCE_ATOL");
    if (value == nullptr) {
        return true;
    }
    try {
        const double atol = parse_double(value, "SETCALC_TOLERANCE_ATOL");
        const ToleranceContext defaults;
        install_default_tolerance(ToleranceContext(atol, defaults.rtol(), defaults.ztol()));
    } catch (const SetError& e) {
        err << "setcalc: invalid argument: " << e.what() << "\n";
        return false;
    }
    return true;
}

}  // namespace setcalc::io
