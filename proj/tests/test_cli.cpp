#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "squircle/eccentric.hpp"
#include "squircle/image.hpp"
#include "squircle/mapping.hpp"
#include "squircle/warp.hpp"

namespace fs = std::filesystem;
using namespace squircle;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path tmp_dir() {
    const char* env = std::getenv("SQUIRCLE_TMP");
    const fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "cli";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("SQUIRCLE_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "SQUIRCLE_CLI must point at the binary");
    const fs::path out = tmp_dir() / "stdout.txt";
    const fs::path err = tmp_dir() / "stderr.txt";
    const std::string cmd = std::string(cli) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_chart(const std::string& name, int w, int h) {
    RasterImage img = RasterImage::make(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::uint8_t* px = img.at(x, y);
            px[0] = static_cast<std::uint8_t>((x * 255) / (w - 1));
            px[1] = static_cast<std::uint8_t>((y * 255) / (h - 1));
            px[2] = static_cast<std::uint8_t>(((x / 8) + (y / 8)) % 2 ? 220 : 40);
            px[3] = 255;
        }
    const fs::path p = tmp_dir() / name;
    save_png(img, p.string());
    return p;
}

}  // namespace

TEST_CASE("probe prints 15 significant digits") {
    const RunResult r = run_cli("probe --map 2-squircular --dir s2d -- 1 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.707106781186548 0.707106781186548\n");

    const RunResult ax = run_cli("probe --map fg-squircular --dir d2s -- 0.5 0");
    CHECK(ax.exit_code == 0);
    CHECK(ax.out == "0.5 0\n");
}

TEST_CASE("probe rejects singular points of open mappings") {
    const RunResult r = run_cli("probe --map squelched-grid --dir s2d -- 1 1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("open mapping") != std::string::npos);
}

TEST_CASE("probe eccentric directions") {
    const RunResult r =
        run_cli("probe --map fg-squircular --dir r2e --a 2 --b 1 -- 2 1");
    CHECK(r.exit_code == 0);
    const EllipsePoint e =
        rect_to_ellipse(MapId::FgSquircular, {2.0, 1.0}, {2.0, 1.0});
    char expect[80];
    std::snprintf(expect, sizeof(expect), "%.15g %.15g\n", e.u, e.v);
    CHECK(r.out == expect);
}

TEST_CASE("roundtrip subcommand thresholds") {
    CHECK(run_cli("roundtrip --map elliptical-grid -n 10000").exit_code == 0);
    CHECK(run_cli("roundtrip --map schwarz-christoffel -n 1000").exit_code == 0);
    CHECK(run_cli("roundtrip --map 4-squircular -n 2000").exit_code == 0);
    CHECK(run_cli("roundtrip --map lame-parametric -n 2000").exit_code == 0);
    CHECK(run_cli("roundtrip --map blended-grid --beta 0.25 -n 5000").exit_code ==
          0);
}

TEST_CASE("elliptify and rectify smoke tests") {
    const fs::path in = write_chart("in.png", 96, 64);
    const fs::path out = tmp_dir() / "out.png";

    CHECK(run_cli("elliptify --map fg-squircular " + in.string() + " " +
                  out.string())
              .exit_code == 0);
    const RasterImage ell = load_png(out.string());
    CHECK(ell.width == 96);
    CHECK(ell.height == 64);
    CHECK(ell.at(0, 0)[3] == 0);        // corner outside the ellipse
    CHECK(ell.at(48, 32)[3] == 255);    // center inside

    CHECK(run_cli("elliptify --map crop " + in.string() + " " + out.string())
              .exit_code == 0);
    const RasterImage cropped = load_png(out.string());
    CHECK(cropped.at(48, 32)[3] == 255);

    const fs::path rect = tmp_dir() / "rect.png";
    CHECK(run_cli("rectify --map fg-squircular " + out.string() + " " +
                  rect.string())
              .exit_code == 0);
    CHECK(load_png(rect.string()).width == 96);
}

TEST_CASE("CLI output byte-matches the library call") {
    const fs::path in = write_chart("blend_in.png", 64, 64);
    const fs::path cli_out = tmp_dir() / "blend_cli.png";
    CHECK(run_cli("elliptify --map blended-grid --beta 0.5 " + in.string() +
                  " " + cli_out.string())
              .exit_code == 0);

    WarpJob job;
    job.kind = MappingKind::blended(0.5);
    const fs::path lib_out = tmp_dir() / "blend_lib.png";
    save_png(elliptify(load_png(in.string()), job), lib_out.string());
    CHECK(slurp(cli_out) == slurp(lib_out));
}

TEST_CASE("grid subcommand renders and verifies") {
    const fs::path svg = tmp_dir() / "grid.svg";
    CHECK(run_cli("grid --map fg-squircular --style polar-in-square --out " +
                  svg.string() + " --verify")
              .exit_code == 0);
    const std::string body = slurp(svg);
    CHECK(body.find("<svg") == 0);

    CHECK(run_cli("grid --map elliptical-grid --style cartesian-in-disc --out " +
                  svg.string())
              .exit_code == 0);
    CHECK(run_cli("grid --map schwarz-christoffel --style polar-in-square "
                  "--out " +
                  svg.string() + " --verify")
              .exit_code == 4);  // no derived continuum to verify against
}

TEST_CASE("grid output is byte-stable across runs") {
    const fs::path a = tmp_dir() / "grid_a.svg";
    const fs::path b = tmp_dir() / "grid_b.svg";
    const std::string args = "grid --map tapered2 --style cartesian-in-disc --out ";
    CHECK(run_cli(args + a.string()).exit_code == 0);
    CHECK(run_cli(args + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("list-maps enumerates the 19 registry kinds") {
    const RunResult r = run_cli("--list-maps");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 20);  // header + 19 kinds
    for (MapId id : all_map_ids())
        CHECK(r.out.find(MappingKind(id).name()) != std::string::npos);
}

TEST_CASE("exit codes for failure classes") {
    CHECK(run_cli("probe --map no-such-map --dir s2d -- 0 0").exit_code == 2);
    CHECK(run_cli("probe --map fg-squircular --dir s2d -- 3 0").exit_code == 2);
    CHECK(run_cli("elliptify --map fg-squircular /no/such/file.png " +
                  (tmp_dir() / "x.png").string())
              .exit_code == 3);
    const fs::path in = write_chart("cap.png", 24, 24);
    CHECK(run_cli("elliptify --map lame-radial --no-numeric-fallback " +
                  in.string() + " " + (tmp_dir() / "cap_out.png").string())
              .exit_code == 4);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}
