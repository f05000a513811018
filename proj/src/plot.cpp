#include "digon/plot.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace digon {

namespace {

// SVG user coordinates: the unit disk fills [-1.2, 1.2]^2 with y pointing up.
std::string xy(Complex z) {
  std::ostringstream os;
  os << std::setprecision(6) << z.real() << ',' << -z.imag();
  return os.str();
}

void polyline(std::ostream& out, const std::vector<Complex>& pts, const char* cls, const char* color) {
  if (pts.empty()) return;
  out << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"0.006\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << xy(pts[i]);
  out << "\"/>\n";
}

void marker(std::ostream& out, double angle, const char* cls, const char* color, double radius) {
  const Complex p = std::polar(1.0, angle);
  out << "  <circle class=\"" << cls << "\" data-angle=\"" << std::setprecision(17) << angle << "\" cx=\""
      << std::setprecision(6) << p.real() << "\" cy=\"" << -p.imag() << "\" r=\"" << radius << "\" fill=\"" << color
      << "\"/>\n";
}

}  // namespace

std::string plot_svg(const SampledMap& sampled) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"600\" height=\"600\">\n";
  out << "  <circle class=\"unit-circle\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"0.008\"/>\n";
  for (const auto& ray : sampled.rays) {
    std::vector<Complex> source;
    std::vector<Complex> image;
    for (const auto& s : ray.samples) {
      source.push_back(s.zeta);
      image.push_back(s.w);
    }
    polyline(out, source, "source", "#bbbbbb");
    polyline(out, image, "image", "#1f4e9c");
  }
  const auto& config = sampled.config;
  for (std::size_t k = 0; k < config.size(); ++k) marker(out, config.anchors.angles[k], "anchor", "#1a7f37", 0.03);
  for (std::size_t k : config.active()) marker(out, CirclePoint::normalize(config.deltas[k]), "delta", "#c62828", 0.025);
  out << "</svg>\n";
  return out.str();
}

std::vector<std::filesystem::path> emit_plot_data(const SampledMap& sampled, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());

  std::vector<std::filesystem::path> written;
  auto open = [&](const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path.string());
    return f;
  };
  for (std::size_t k = 0; k < sampled.rays.size(); ++k) {
    const auto path = dir / ("ray_" + std::to_string(k) + ".csv");
    auto f = open(path);
    write_ray_csv(sampled.rays[k], f);
    written.push_back(path);
  }
  const auto svg = dir / "overlay.svg";
  auto f = open(svg);
  f << plot_svg(sampled);
  written.push_back(svg);
  return written;
}

}  // namespace digon
