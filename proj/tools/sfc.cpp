// sfc: command-line access to the space-filling-curve library. One
// subcommand per library operation; outputs are written atomically and all
// runs are byte-reproducible (see SFC_THREADS in the README).
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sfc/curve_map.hpp"
#include "sfc/degrid.hpp"
#include "sfc/dilation.hpp"
#include "sfc/dtw.hpp"
#include "sfc/errors.hpp"
#include "sfc/image.hpp"
#include "sfc/scale.hpp"
#include "sfc/text.hpp"
#include "sfc/toyset.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonDims {
    unsigned order = 0;
    std::uint32_t width = 0;
    std::uint32_t height = 0;

    bool has_order() const { return order > 0; }
    bool has_rect() const { return width > 0 || height > 0; }

    std::pair<std::uint32_t, std::uint32_t> resolve(const std::string& cmd) const {
        if (has_order() && has_rect()) {
            throw sfc::config_error(cmd + ": pass either --order or --width/--height, not both");
        }
        if (has_order()) {
            if (order > 16) {
                throw sfc::config_error(cmd + ": --order above 16 would materialize more than 2^32 cells");
            }
            const std::uint32_t side = std::uint32_t{1} << order;
            return {side, side};
        }
        if (width == 0 || height == 0) {
            throw sfc::config_error(cmd + ": provide --order N, or both --width and --height");
        }
        return {width, height};
    }
};

void add_dim_options(CLI::App* cmd, CommonDims& dims) {
    cmd->add_option("--order", dims.order, "Side exponent n for a 2^n x 2^n grid");
    cmd->add_option("--width", dims.width, "Grid width in cells");
    cmd->add_option("--height", dims.height, "Grid height in cells");
}

sfc::CurveKind parse_curve(const std::string& name) {
    const auto kind = sfc::curve_from_string(name);
    if (!kind) {
        throw sfc::config_error("--curve: unknown curve '" + name +
                                "' (expected hilbert|morton|zigzag|ghilbert)");
    }
    return *kind;
}

void write_file_atomic(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) {
            throw sfc::domain_error("cannot open '" + tmp.string() + "' for writing");
        }
        writer(os);
        os.flush();
        if (!os) {
            throw sfc::domain_error("write failed for '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, path);
}

void print_summary(ordered_json j) {
    j["status"] = "ok";
    std::cout << j.dump() << '\n';
}

std::ifstream open_input(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw sfc::domain_error("cannot open input file '" + path + "'");
    }
    return is;
}

// Sequence files are CSV with an optional header; the value is the last
// comma-separated field of each row.
std::vector<double> read_sequence(const std::string& path) {
    std::ifstream is = open_input(path);
    std::vector<double> values;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.rfind(',');
        const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
        double v = 0.0;
        const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
        if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            if (first) {
                first = false;
                continue; // header row
            }
            throw sfc::domain_error("malformed sequence value '" + field + "' in " + path);
        }
        first = false;
        values.push_back(v);
    }
    return values;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t steps) {
    if (!(lo > 0.0) || hi < lo || steps < 2) {
        throw sfc::config_error("--eps-min/--eps-max: need 0 < min <= max and --eps-steps >= 2");
    }
    std::vector<double> eps;
    eps.reserve(steps);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = double(i) / double(steps - 1);
        eps.push_back(std::exp(llo + t * (lhi - llo)));
    }
    eps.front() = lo;
    eps.back() = hi;
    return eps;
}

ordered_json dilation_json(const sfc::DilationReport& r) {
    return ordered_json::parse(sfc::to_json(r));
}

// ---- subcommand actions ----

int run_map(const std::string& curve, const CommonDims& dims, const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    const auto [w, h] = dims.resolve("map");
    const sfc::CurveMap map = sfc::build_map(kind, w, h);
    write_file_atomic(out, [&](std::ostream& os) { sfc::write_curve_map_csv(map, os); });
    print_summary({{"subcommand", "map"},
                   {"curve", sfc::to_string(kind)},
                   {"width", map.width},
                   {"height", map.height},
                   {"rows", map.size()},
                   {"out", out}});
    return 0;
}

int run_flatten(const std::string& curve, const std::string& image_path,
                const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    std::ifstream is = open_input(image_path);
    const sfc::GrayImage img = sfc::read_pgm(is);
    const sfc::CurveMap map = sfc::build_map(kind, img.width, img.height);
    const std::vector<double> seq = sfc::flatten(img, map);
    write_file_atomic(out, [&](std::ostream& os) {
        os << "d,value\n";
        for (std::size_t d = 0; d < seq.size(); ++d) {
            os << d << ',' << sfc::format_double(seq[d]) << '\n';
        }
    });
    print_summary({{"subcommand", "flatten"},
                   {"curve", sfc::to_string(kind)},
                   {"width", img.width},
                   {"height", img.height},
                   {"length", seq.size()},
                   {"out", out}});
    return 0;
}

int run_fold(const std::string& curve, const CommonDims& dims, const std::string& seq_path,
             const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    const auto [w, h] = dims.resolve("fold");
    const sfc::CurveMap map = sfc::build_map(kind, w, h);
    const std::vector<double> seq = read_sequence(seq_path);
    const sfc::GrayImage img = sfc::fold(seq, map);
    write_file_atomic(out, [&](std::ostream& os) { sfc::write_pgm_p5(img, os); });
    print_summary({{"subcommand", "fold"},
                   {"curve", sfc::to_string(kind)},
                   {"width", img.width},
                   {"height", img.height},
                   {"out", out}});
    return 0;
}

int run_patch_order(std::uint32_t w, std::uint32_t h, const std::string& out) {
    const auto order = sfc::patch_order(w, h);
    write_file_atomic(out, [&](std::ostream& os) { sfc::write_patch_order_csv(order, os); });
    print_summary({{"subcommand", "patch-order"},
                   {"width", w},
                   {"height", h},
                   {"slots", order.size()},
                   {"out", out}});
    return 0;
}

int run_degrid(const std::string& curve, const CommonDims& dims, unsigned k, bool squared,
               const std::string& format, const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    const auto [w, h] = dims.resolve("degrid");
    const sfc::CurveMap map = sfc::build_map(kind, w, h);
    const sfc::DeGridField field = sfc::degrid(map, k, squared);
    if (format == "csv") {
        write_file_atomic(out, [&](std::ostream& os) { sfc::write_degrid_csv(field, map, os); });
    } else if (format == "pgm") {
        write_file_atomic(out, [&](std::ostream& os) { sfc::write_degrid_pgm(field, map, os); });
    } else {
        throw sfc::config_error("--format: degrid supports csv or pgm (got '" + format + "')");
    }
    const double vmax = *std::max_element(field.values.begin(), field.values.end());
    print_summary({{"subcommand", "degrid"},
                   {"curve", sfc::to_string(kind)},
                   {"k", k},
                   {"squared", squared},
                   {"max_degrid", vmax},
                   {"out", out}});
    return 0;
}

int run_preserve(unsigned order, unsigned k, double eps_min, double eps_max,
                 std::size_t eps_steps, bool squared, const std::string& out) {
    const std::uint32_t side = std::uint32_t{1} << order;
    const sfc::DeGridField hf = sfc::degrid(sfc::build_map(sfc::CurveKind::Hilbert, side, side), k, squared);
    const sfc::DeGridField mf = sfc::degrid(sfc::build_map(sfc::CurveKind::Morton, side, side), k, squared);
    const sfc::DeGridField zf = sfc::degrid(sfc::build_map(sfc::CurveKind::Zigzag, side, side), k, squared);

    std::vector<double> eps;
    if (eps_min > 0.0 || eps_max > 0.0) {
        eps = log_spaced(eps_min, eps_max, eps_steps);
    } else {
        double vmin = std::numeric_limits<double>::infinity();
        double vmax = 0.0;
        for (const auto* f : {&hf, &mf, &zf}) {
            vmin = std::min(vmin, *std::min_element(f->values.begin(), f->values.end()));
            vmax = std::max(vmax, *std::max_element(f->values.begin(), f->values.end()));
        }
        eps = sfc::default_thresholds(vmin, vmax, eps_steps);
    }
    write_file_atomic(out, [&](std::ostream& os) {
        sfc::write_preservation_csv(eps, hf, mf, zf, os);
    });
    print_summary({{"subcommand", "preserve"},
                   {"order", order},
                   {"k", k},
                   {"squared", squared},
                   {"thresholds", eps.size()},
                   {"out", out}});
    return 0;
}

int run_dilation(const std::string& curve, unsigned order, const std::string& mode_name,
                 const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    sfc::DilationMode mode;
    if (mode_name == "all-pairs") {
        mode = sfc::DilationMode::AllPairs;
    } else if (mode_name == "adjacent") {
        mode = sfc::DilationMode::AdjacentOnly;
    } else {
        throw sfc::config_error("--mode: expected all-pairs or adjacent (got '" + mode_name + "')");
    }
    const std::uint32_t side = std::uint32_t{1} << order;
    const sfc::DilationReport report = sfc::dilation(sfc::build_map(kind, side, side), mode);
    const ordered_json j = dilation_json(report);
    if (!out.empty()) {
        write_file_atomic(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    std::cout << j.dump() << '\n';
    return 0;
}

int run_scale_trace(const std::string& curve, const std::string& t1_text,
                    const std::string& t2_text, unsigned n_min, unsigned n_max,
                    const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    const sfc::Dyadic t1 = sfc::parse_fraction(t1_text);
    const sfc::Dyadic t2 = sfc::parse_fraction(t2_text);
    const sfc::ScaleTrace trace = sfc::scale_trace(kind, t1, t2, n_min, n_max);
    const ordered_json j = ordered_json::parse(sfc::to_json(trace));
    if (!out.empty()) {
        write_file_atomic(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    std::cout << j.dump() << '\n';
    return 0;
}

int run_hierarchy(const std::string& curve, unsigned order, const std::string& out) {
    const sfc::CurveKind kind = parse_curve(curve);
    const std::uint64_t violations = sfc::hierarchy_check(kind, order);
    const ordered_json j = {{"subcommand", "hierarchy"},
                            {"curve", sfc::to_string(kind)},
                            {"order", order},
                            {"violations", violations}};
    if (!out.empty()) {
        write_file_atomic(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    std::cout << j.dump() << '\n';
    return 0;
}

int run_toyset(const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::size_t files = 0;
    for (const sfc::ShapeSpec& spec : sfc::toy_dataset()) {
        const sfc::GrayImage img = sfc::generate_shape(spec);
        write_file_atomic(fs::path(out_dir) / sfc::shape_file_name(spec),
                          [&](std::ostream& os) { sfc::write_pgm_p5(img, os); });
        ++files;
    }
    print_summary({{"subcommand", "toyset"}, {"files", files}, {"out", out_dir}});
    return 0;
}

int run_dtw(const std::string& a_path, const std::string& b_path,
            const std::string& normalize, const std::string& out) {
    const std::vector<double> a = read_sequence(a_path);
    const std::vector<double> b = read_sequence(b_path);
    double cost = 0.0;
    if (normalize == "path") {
        const sfc::DtwAlignment al = sfc::dtw_alignment(a, b);
        cost = al.cost / double(al.path_steps);
    } else if (normalize == "none") {
        cost = sfc::dtw(a, b);
    } else {
        throw sfc::config_error("--normalize: expected none or path (got '" + normalize + "')");
    }
    const ordered_json j = {{"subcommand", "dtw"},
                            {"len_a", a.size()},
                            {"len_b", b.size()},
                            {"normalize", normalize},
                            {"cost", cost}};
    if (!out.empty()) {
        write_file_atomic(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    std::cout << j.dump() << '\n';
    return 0;
}

sfc::DtwNormalize parse_normalize(const std::string& name) {
    if (name == "none") return sfc::DtwNormalize::None;
    if (name == "path") return sfc::DtwNormalize::PathMean;
    throw sfc::config_error("--normalize: expected none or path (got '" + name + "')");
}

int run_dtw_table(const std::string& curves_text, const std::string& shapes_text,
                  const std::string& normalize, const std::string& out) {
    std::vector<sfc::CurveKind> curves;
    for (const std::string& name : split_csv_list(curves_text)) {
        const auto kind = sfc::curve_from_string(name);
        if (!kind || *kind == sfc::CurveKind::GeneralizedHilbert) {
            throw sfc::config_error("--curves: expected a list from hilbert,morton,zigzag (got '" +
                                    name + "')");
        }
        curves.push_back(*kind);
    }
    std::vector<sfc::Shape> shapes;
    for (const std::string& name : split_csv_list(shapes_text)) {
        if (name == "circle") shapes.push_back(sfc::Shape::Circle);
        else if (name == "square") shapes.push_back(sfc::Shape::Square);
        else if (name == "triangle") shapes.push_back(sfc::Shape::Triangle);
        else throw sfc::config_error("--shapes: unknown shape '" + name + "'");
    }
    const sfc::DtwTableResult table = sfc::dtw_table(curves, shapes, parse_normalize(normalize));
    write_file_atomic(out, [&](std::ostream& os) { sfc::write_dtw_table_csv(table, os); });
    print_summary({{"subcommand", "dtw-table"},
                   {"curves", split_csv_list(curves_text)},
                   {"shapes", split_csv_list(shapes_text)},
                   {"normalize", normalize},
                   {"cells", table.cells.size()},
                   {"out", out}});
    return 0;
}

int run_report(const std::string& out_dir) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    std::vector<std::string> written;

    // grid-structure preservation sweep and heatmaps (8x8, K=2)
    {
        const sfc::DeGridField hf = sfc::degrid(sfc::build_map(sfc::CurveKind::Hilbert, 8, 8), 2);
        const sfc::DeGridField mf = sfc::degrid(sfc::build_map(sfc::CurveKind::Morton, 8, 8), 2);
        const sfc::DeGridField zf = sfc::degrid(sfc::build_map(sfc::CurveKind::Zigzag, 8, 8), 2);
        double vmin = std::numeric_limits<double>::infinity(), vmax = 0.0;
        for (const auto* f : {&hf, &mf, &zf}) {
            vmin = std::min(vmin, *std::min_element(f->values.begin(), f->values.end()));
            vmax = std::max(vmax, *std::max_element(f->values.begin(), f->values.end()));
        }
        const auto eps = sfc::default_thresholds(vmin, vmax);
        write_file_atomic(dir / "preservation_sweep.csv", [&](std::ostream& os) {
            sfc::write_preservation_csv(eps, hf, mf, zf, os);
        });
        written.push_back("preservation_sweep.csv");

        const std::pair<const sfc::DeGridField*, const char*> heatmaps[] = {
            {&hf, "degrid_heatmap_hilbert.pgm"},
            {&mf, "degrid_heatmap_morton.pgm"},
            {&zf, "degrid_heatmap_zigzag.pgm"},
        };
        for (const auto& [field, name] : heatmaps) {
            const sfc::CurveMap map = sfc::build_map(field->kind, 8, 8);
            write_file_atomic(dir / name,
                              [&](std::ostream& os) { sfc::write_degrid_pgm(*field, map, os); });
            written.push_back(name);
        }
    }

    // dilation ladder n=2..6 (all pairs through n=5, adjacent sampling at 6)
    {
        ordered_json ladder = ordered_json::array();
        for (const sfc::CurveKind kind :
             {sfc::CurveKind::Hilbert, sfc::CurveKind::Morton, sfc::CurveKind::Zigzag}) {
            for (unsigned n = 2; n <= 6; ++n) {
                const std::uint32_t side = std::uint32_t{1} << n;
                const auto mode =
                    n <= 5 ? sfc::DilationMode::AllPairs : sfc::DilationMode::AdjacentOnly;
                ladder.push_back(dilation_json(sfc::dilation(sfc::build_map(kind, side, side), mode)));
            }
        }
        write_file_atomic(dir / "dilation_ladder.json",
                          [&](std::ostream& os) { os << ladder.dump(2) << '\n'; });
        written.push_back("dilation_ladder.json");
    }

    // multiscale fold distances for a generic pair (hilbert) and the
    // row-wrap straddle (zigzag)
    {
        const std::uint64_t q = std::uint64_t{1} << 20; // 4^10
        const sfc::ScaleTrace ht = sfc::scale_trace(sfc::CurveKind::Hilbert, {0, q},
                                                    {q - 1, q}, 1, 10);
        const sfc::ScaleTrace zt = sfc::scale_trace(sfc::CurveKind::Zigzag, {q / 2 - 1, q},
                                                    {q / 2 + 1, q}, 2, 10);
        write_file_atomic(dir / "scale_trace_hilbert.json", [&](std::ostream& os) {
            os << ordered_json::parse(sfc::to_json(ht)).dump(2) << '\n';
        });
        write_file_atomic(dir / "scale_trace_zigzag.json", [&](std::ostream& os) {
            os << ordered_json::parse(sfc::to_json(zt)).dump(2) << '\n';
        });
        written.push_back("scale_trace_hilbert.json");
        written.push_back("scale_trace_zigzag.json");
    }

    // hierarchical nesting violations per curve and order
    write_file_atomic(dir / "hierarchy.csv", [&](std::ostream& os) {
        os << "curve,order,violations\n";
        for (const sfc::CurveKind kind :
             {sfc::CurveKind::Hilbert, sfc::CurveKind::Morton, sfc::CurveKind::Zigzag}) {
            for (unsigned n = 1; n <= 7; ++n) {
                os << sfc::to_string(kind) << ',' << n << ',' << sfc::hierarchy_check(kind, n)
                   << '\n';
            }
        }
    });
    written.push_back("hierarchy.csv");

    // toy dataset and its DTW comparison table
    {
        fs::create_directories(dir / "toyset");
        for (const sfc::ShapeSpec& spec : sfc::toy_dataset()) {
            const sfc::GrayImage img = sfc::generate_shape(spec);
            write_file_atomic(dir / "toyset" / sfc::shape_file_name(spec),
                              [&](std::ostream& os) { sfc::write_pgm_p5(img, os); });
            written.push_back("toyset/" + sfc::shape_file_name(spec));
        }
        const std::vector<sfc::CurveKind> curves = {
            sfc::CurveKind::Hilbert, sfc::CurveKind::Morton, sfc::CurveKind::Zigzag};
        const sfc::DtwTableResult table = sfc::dtw_table(curves);
        write_file_atomic(dir / "dtw_toyset.csv",
                          [&](std::ostream& os) { sfc::write_dtw_table_csv(table, os); });
        written.push_back("dtw_toyset.csv");
    }

    print_summary({{"subcommand", "report"}, {"files", written.size()}, {"out", out_dir}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Space-filling-curve flattening, locality metrics and toy-shape studies"};
    app.require_subcommand(1);

    std::function<int()> action;

    // map
    {
        auto* cmd = app.add_subcommand("map", "Export a curve traversal as CSV (d,x,y)");
        auto curve = std::make_shared<std::string>();
        auto dims = std::make_shared<CommonDims>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag|ghilbert")->required();
        add_dim_options(cmd, *dims);
        cmd->add_option("--out", *out, "Output CSV path")->required();
        cmd->callback([=, &action] { action = [=] { return run_map(*curve, *dims, *out); }; });
    }
    // flatten
    {
        auto* cmd = app.add_subcommand("flatten", "Flatten a PGM image into a sequence CSV");
        auto curve = std::make_shared<std::string>();
        auto image = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag|ghilbert")->required();
        cmd->add_option("--image", *image, "Input PGM (P2 or P5)")->required();
        cmd->add_option("--out", *out, "Output CSV path (d,value)")->required();
        cmd->callback([=, &action] { action = [=] { return run_flatten(*curve, *image, *out); }; });
    }
    // fold
    {
        auto* cmd = app.add_subcommand("fold", "Fold a sequence CSV back into a PGM image");
        auto curve = std::make_shared<std::string>();
        auto dims = std::make_shared<CommonDims>();
        auto seq = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag|ghilbert")->required();
        add_dim_options(cmd, *dims);
        cmd->add_option("--seq", *seq, "Input sequence CSV")->required();
        cmd->add_option("--out", *out, "Output PGM path (P5)")->required();
        cmd->callback(
            [=, &action] { action = [=] { return run_fold(*curve, *dims, *seq, *out); }; });
    }
    // patch-order
    {
        auto* cmd = app.add_subcommand("patch-order",
                                       "Hilbert patch permutation as CSV (slot,raster_index)");
        auto w = std::make_shared<std::uint32_t>(0);
        auto h = std::make_shared<std::uint32_t>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--width", *w, "Patch grid width")->required();
        cmd->add_option("--height", *h, "Patch grid height")->required();
        cmd->add_option("--out", *out, "Output CSV path")->required();
        cmd->callback([=, &action] { action = [=] { return run_patch_order(*w, *h, *out); }; });
    }
    // degrid
    {
        auto* cmd = app.add_subcommand("degrid", "Per-position grid deformation field");
        auto curve = std::make_shared<std::string>();
        auto dims = std::make_shared<CommonDims>();
        auto k = std::make_shared<unsigned>(2);
        auto squared = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("csv");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag|ghilbert")->required();
        add_dim_options(cmd, *dims);
        cmd->add_option("--k", *k, "Neighborhood radius in sequence steps")->capture_default_str();
        cmd->add_flag("--squared", *squared, "Average squared distances instead of distances");
        cmd->add_option("--format", *format, "csv|pgm")->capture_default_str();
        cmd->add_option("--out", *out, "Output path")->required();
        cmd->callback([=, &action] {
            action = [=] { return run_degrid(*curve, *dims, *k, *squared, *format, *out); };
        });
    }
    // preserve
    {
        auto* cmd = app.add_subcommand(
            "preserve", "Preservation percentages for hilbert/morton/zigzag over a threshold sweep");
        auto order = std::make_shared<unsigned>(3);
        auto k = std::make_shared<unsigned>(2);
        auto eps_min = std::make_shared<double>(0.0);
        auto eps_max = std::make_shared<double>(0.0);
        auto eps_steps = std::make_shared<std::size_t>(64);
        auto squared = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--order", *order, "Side exponent n")->capture_default_str();
        cmd->add_option("--k", *k, "Neighborhood radius")->capture_default_str();
        cmd->add_option("--eps-min", *eps_min, "Smallest threshold (default: from the data)");
        cmd->add_option("--eps-max", *eps_max, "Largest threshold (default: from the data)");
        cmd->add_option("--eps-steps", *eps_steps, "Number of thresholds")->capture_default_str();
        cmd->add_flag("--squared", *squared, "Average squared distances instead of distances");
        cmd->add_option("--out", *out, "Output CSV path")->required();
        cmd->callback([=, &action] {
            action = [=] {
                if ((*eps_min > 0.0) != (*eps_max > 0.0)) {
                    throw sfc::config_error("--eps-min and --eps-max must be given together");
                }
                return run_preserve(*order, *k, *eps_min, *eps_max, *eps_steps, *squared, *out);
            };
        });
    }
    // dilation
    {
        auto* cmd = app.add_subcommand("dilation", "Empirical square-to-linear dilation factor");
        auto curve = std::make_shared<std::string>();
        auto order = std::make_shared<unsigned>(0);
        auto mode = std::make_shared<std::string>("all-pairs");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag")->required();
        cmd->add_option("--order", *order, "Side exponent n")->required();
        cmd->add_option("--mode", *mode, "all-pairs|adjacent")->capture_default_str();
        cmd->add_option("--out", *out, "Optional JSON output path");
        cmd->callback([=, &action] {
            action = [=] { return run_dilation(*curve, *order, *mode, *out); };
        });
    }
    // scale-trace
    {
        auto* cmd = app.add_subcommand("scale-trace",
                                       "Fold distances of a dyadic pair across grid orders");
        auto curve = std::make_shared<std::string>();
        auto t1 = std::make_shared<std::string>();
        auto t2 = std::make_shared<std::string>();
        auto n_min = std::make_shared<unsigned>(1);
        auto n_max = std::make_shared<unsigned>(10);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag")->required();
        cmd->add_option("--t1", *t1, "First parameter as P/Q")->required();
        cmd->add_option("--t2", *t2, "Second parameter as P/Q")->required();
        cmd->add_option("--n-min", *n_min, "First order")->capture_default_str();
        cmd->add_option("--n-max", *n_max, "Last order")->capture_default_str();
        cmd->add_option("--out", *out, "Optional JSON output path");
        cmd->callback([=, &action] {
            action = [=] { return run_scale_trace(*curve, *t1, *t2, *n_min, *n_max, *out); };
        });
    }
    // hierarchy
    {
        auto* cmd = app.add_subcommand("hierarchy",
                                       "Count cells violating coarse/fine index nesting");
        auto curve = std::make_shared<std::string>();
        auto order = std::make_shared<unsigned>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curve", *curve, "hilbert|morton|zigzag")->required();
        cmd->add_option("--order", *order, "Coarse side exponent n")->required();
        cmd->add_option("--out", *out, "Optional JSON output path");
        cmd->callback(
            [=, &action] { action = [=] { return run_hierarchy(*curve, *order, *out); }; });
    }
    // toyset
    {
        auto* cmd = app.add_subcommand("toyset", "Write the 18 synthetic shape images as PGM");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "Output directory")->required();
        cmd->callback([=, &action] { action = [=] { return run_toyset(*out); }; });
    }
    // dtw
    {
        auto* cmd = app.add_subcommand("dtw", "Dynamic-time-warping cost of two sequence CSVs");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto normalize = std::make_shared<std::string>("none");
        auto out = std::make_shared<std::string>();
        cmd->add_option("a", *a, "First sequence CSV")->required();
        cmd->add_option("b", *b, "Second sequence CSV")->required();
        cmd->add_option("--normalize", *normalize, "none|path")->capture_default_str();
        cmd->add_option("--out", *out, "Optional JSON output path");
        cmd->callback(
            [=, &action] { action = [=] { return run_dtw(*a, *b, *normalize, *out); }; });
    }
    // dtw-table
    {
        auto* cmd = app.add_subcommand("dtw-table",
                                       "Toy-shape DTW comparison table across curves");
        auto curves = std::make_shared<std::string>("hilbert,morton,zigzag");
        auto shapes = std::make_shared<std::string>("circle,square,triangle");
        auto normalize = std::make_shared<std::string>("none");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--curves,--curve", *curves, "Comma list of curves")->capture_default_str();
        cmd->add_option("--shapes", *shapes, "Comma list of shapes")->capture_default_str();
        cmd->add_option("--normalize", *normalize, "none|path")->capture_default_str();
        cmd->add_option("--out", *out, "Output CSV path")->required();
        cmd->callback([=, &action] {
            action = [=] { return run_dtw_table(*curves, *shapes, *normalize, *out); };
        });
    }
    // report
    {
        auto* cmd = app.add_subcommand(
            "report", "Run the full analysis pipeline into an output directory");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "Output directory")->required();
        cmd->callback([=, &action] { action = [=] { return run_report(*out); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const sfc::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
