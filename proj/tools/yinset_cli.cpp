// Command-line front end: Boolean operations, topology queries, point
// location, validation, and SVG rendering over spadjor documents.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or I/O error.

#include <iostream>

#include <CLI11.hpp>

#include "yinset/yinset.hpp"

namespace {

struct LoadedInput {
    yinset::RealizableSpadjor spadjor = yinset::RealizableSpadjor::zero();
    double eps = 1e-9;
};

// The tolerance must be one consistent value per computation: an explicit
// --eps wins, otherwise all input documents must agree.
double resolve_eps(const std::vector<yinset::SpadjorDocument>& docs, double cli_eps,
                   bool eps_given) {
    if (eps_given) return cli_eps;
    double eps = docs.empty() ? 1e-9 : docs.front().epsilon;
    for (const auto& d : docs) {
        if (d.epsilon != eps)
            throw yinset::DocumentError(
                "input documents carry different epsilons; pass --eps to choose one");
    }
    return eps;
}

int run(int argc, char** argv) {
    CLI::App app{"Boolean algebra on Yin sets (regular open planar regions bounded by "
                 "oriented Jordan curves)"};
    app.require_subcommand(1);

    double cli_eps = 1e-9;
    app.add_option("--eps", cli_eps, "tolerance below which two points are the same point")
        ->check(CLI::PositiveNumber);

    std::string out;
    std::string window_spec;
    std::string in_a;
    std::string in_b;
    double px = 0.0;
    double py = 0.0;

    auto one_input = [&](CLI::App* cmd) { cmd->add_option("input", in_a)->required(); };
    auto two_inputs = [&](CLI::App* cmd) {
        cmd->add_option("first", in_a)->required();
        cmd->add_option("second", in_b)->required();
        cmd->add_option("-o,--output", out)->required();
    };

    auto* c_complement = app.add_subcommand("complement", "complement of a region");
    one_input(c_complement);
    c_complement->add_option("-o,--output", out)->required();

    auto* c_meet = app.add_subcommand("meet", "intersection of two regions");
    two_inputs(c_meet);

    auto* c_join = app.add_subcommand("join", "regularized union of two regions");
    two_inputs(c_join);

    auto* c_diff = app.add_subcommand("difference", "first region minus second");
    two_inputs(c_diff);

    auto* c_sym = app.add_subcommand("symdiff", "symmetric difference of two regions");
    two_inputs(c_sym);

    auto* c_betti = app.add_subcommand("betti", "connected components and holes");
    one_input(c_betti);

    auto* c_locate = app.add_subcommand("locate", "locate a point relative to a region");
    one_input(c_locate);
    c_locate->add_option("x", px)->required();
    c_locate->add_option("y", py)->required();

    auto* c_validate = app.add_subcommand("validate", "check a document for realizability");
    one_input(c_validate);

    auto* c_render = app.add_subcommand("render", "render a region to SVG");
    one_input(c_render);
    c_render->add_option("-o,--output", out)->required();
    c_render->add_option("--window", window_spec, "x0,y0,x1,y1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool two = c_meet->parsed() || c_join->parsed() || c_diff->parsed() || c_sym->parsed();

    try {
        std::vector<yinset::SpadjorDocument> docs;
        docs.push_back(yinset::read_document(in_a));
        if (two) docs.push_back(yinset::read_document(in_b));
        const yinset::Tolerance tol(resolve_eps(docs, cli_eps, app.count("--eps") > 0));

        if (c_validate->parsed()) {
            if (docs[0].special) {
                std::cout << "ok\n";
                return 0;
            }
            std::vector<yinset::OrientedJordanCurve> curves;
            for (const auto& pts : docs[0].curves) curves.emplace_back(pts, tol);
            const auto violations = yinset::validate(curves, tol);
            if (violations.empty()) {
                std::cout << "ok\n";
                return 0;
            }
            for (const auto& v : violations)
                std::cerr << "violation: " << v.message << " (curves " << v.curve_a << ", "
                          << v.curve_b << " near " << yinset::point_str(v.where) << ")\n";
            return 1;
        }

        std::vector<yinset::RealizableSpadjor> in;
        for (const auto& d : docs) in.push_back(yinset::to_spadjor(d, tol));

        if (c_complement->parsed()) {
            yinset::save(yinset::complement(in[0], tol), out, tol);
        } else if (c_meet->parsed()) {
            yinset::save(yinset::meet(in[0], in[1], tol), out, tol);
        } else if (c_join->parsed()) {
            yinset::save(yinset::join(in[0], in[1], tol), out, tol);
        } else if (c_diff->parsed()) {
            yinset::save(yinset::difference(in[0], in[1], tol), out, tol);
        } else if (c_sym->parsed()) {
            yinset::save(yinset::symmetric_difference(in[0], in[1], tol), out, tol);
        } else if (c_betti->parsed()) {
            const auto b = yinset::betti(in[0]);
            std::cout << "components=" << b.components << " holes=[";
            for (std::size_t i = 0; i < b.holes_per_component.size(); ++i)
                std::cout << (i ? "," : "") << b.holes_per_component[i];
            std::cout << "]\n";
        } else if (c_locate->parsed()) {
            switch (yinset::locate(in[0], {px, py}, tol)) {
                case yinset::PointLocation::Interior: std::cout << "interior\n"; break;
                case yinset::PointLocation::Exterior: std::cout << "exterior\n"; break;
                case yinset::PointLocation::Boundary: std::cout << "boundary\n"; break;
            }
        } else if (c_render->parsed()) {
            std::optional<yinset::Window> window;
            if (!window_spec.empty()) {
                yinset::Window w{};
                char c1 = 0, c2 = 0, c3 = 0;
                std::istringstream ss(window_spec);
                if (!(ss >> w.x0 >> c1 >> w.y0 >> c2 >> w.x1 >> c3 >> w.y1) || c1 != ',' ||
                    c2 != ',' || c3 != ',')
                    throw yinset::DocumentError("--window expects x0,y0,x1,y1");
                window = w;
            }
            yinset::render(in[0], out, window);
        }
        return 0;
    } catch (const yinset::SpadjorValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& v : e.violations)
            std::cerr << "violation: " << v.message << " (curves " << v.curve_a << ", "
                      << v.curve_b << " near " << yinset::point_str(v.where) << ")\n";
        return 1;
    } catch (const yinset::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
