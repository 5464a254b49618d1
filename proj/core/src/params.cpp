#include "dsnn/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsnn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view key, std::string_view value) {
  std::string tmp(value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(tmp, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + std::string(key) + "': " + tmp);
  }
  if (used != tmp.size())
    throw std::invalid_argument("config: bad numeric value for '" + std::string(key) + "': " + tmp);
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw std::invalid_argument("config: bad integer value for '" + std::string(key) +
                                "': " + std::string(value));
  return out;
}

}  // namespace

Params default_params(int rows, int cols) {
  Params p;
  p.rows = rows;
  p.cols = cols;
  return validate(p);
}

Params validate(Params p) {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };

  if (p.rows <= 0) fail("rows must be positive");
  if (p.cols <= 0) fail("cols must be positive");
  if (p.frame_rate <= 0.0) fail("frame_rate must be positive");
  if (p.u <= 0.0) fail("u must be positive");
  if (p.n_p < 0) fail("n_p must be nonnegative");
  if (p.sigma_e <= 0.0) fail("sigma_e must be positive");
  if (p.sigma_i <= p.sigma_e) fail("surround must be broader than center (sigma_i > sigma_e)");
  if (p.sigma_l < 0.0 || p.sigma_l >= 1.0) fail("sigma_l must be in [0, 1)");
  if (p.tau_fast <= 0.0) fail("tau_fast must be positive");
  if (p.tau_slow <= p.tau_fast) fail("tau_slow must exceed tau_fast");
  if (p.n_con < 1) fail("n_con must be positive");
  if (p.d < 1) fail("d must be positive");
  if (p.w_i < 0.0 || p.w_i > 1.0) fail("w_i must be in [0, 1]");
  if (p.tau_s_min <= 0.0) fail("tau_s_min must be positive");
  if (p.tau_s_max < p.tau_s_min) fail("tau schedule inverted (tau_s_max < tau_s_min)");
  if (p.tau_mp <= 0.0) fail("tau_mp must be positive");
  if (p.k_sig <= 0.0) fail("k_sig must be positive");
  if (p.k_sp <= 0.0) fail("k_sp must be positive");
  if (p.t_sp <= 0.0 || p.t_sp >= 0.5) fail("t_sp must be in (0, 0.5)");
  if (p.n_con * p.d >= std::min(p.rows, p.cols))
    fail("farthest connection exceeds the field (n_con * d must be < min(rows, cols))");
  return p;
}

Params apply_config_text(Params base, std::string_view text) {
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not of the form 'key = value'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is missing a key or value");

    if (key == "rows") base.rows = parse_int(key, value);
    else if (key == "cols") base.cols = parse_int(key, value);
    else if (key == "frame_rate") base.frame_rate = parse_real(key, value);
    else if (key == "u") base.u = parse_real(key, value);
    else if (key == "n_p") base.n_p = parse_int(key, value);
    else if (key == "sigma_e") base.sigma_e = parse_real(key, value);
    else if (key == "sigma_i") base.sigma_i = parse_real(key, value);
    else if (key == "sigma_l") base.sigma_l = parse_real(key, value);
    else if (key == "tau_fast") base.tau_fast = parse_real(key, value);
    else if (key == "tau_slow") base.tau_slow = parse_real(key, value);
    else if (key == "n_con") base.n_con = parse_int(key, value);
    else if (key == "d") base.d = parse_int(key, value);
    else if (key == "w_i") base.w_i = parse_real(key, value);
    else if (key == "tau_s_min") base.tau_s_min = parse_real(key, value);
    else if (key == "tau_s_max") base.tau_s_max = parse_real(key, value);
    else if (key == "tau_mp") base.tau_mp = parse_real(key, value);
    else if (key == "k_sig") base.k_sig = parse_real(key, value);
    else if (key == "delta_c") base.delta_c = parse_real(key, value);
    else if (key == "k_sp") base.k_sp = parse_real(key, value);
    else if (key == "t_sp") base.t_sp = parse_real(key, value);
    else if (key == "ablation") base.ablation = ablation_from_string(value);
    else
      throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
  }
  return base;
}

Params load_config_file(Params base, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return apply_config_text(base, ss.str());
}

const char* to_string(Ablation a) {
  switch (a) {
    case Ablation::intact: return "intact";
    case Ablation::on_blocked: return "on_blocked";
    case Ablation::off_blocked: return "off_blocked";
  }
  return "intact";
}

Ablation ablation_from_string(std::string_view s) {
  if (s == "intact") return Ablation::intact;
  if (s == "on_blocked") return Ablation::on_blocked;
  if (s == "off_blocked") return Ablation::off_blocked;
  throw std::invalid_argument("unknown ablation mode '" + std::string(s) +
                              "' (expected intact, on_blocked or off_blocked)");
}

}  // namespace dsnn
