#include <CLI11.hpp>
#include <json.hpp>

#include <ctk/parse.hpp>
#include <ctk/telescope.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace ctk;

namespace {

struct Job {
  std::string command;
  CaseTag tag = CaseTag::Shift;
  RatFunc fx, fy;
  std::optional<QProperDescriptor> qproper;
  std::optional<int> maxOrder;
  bool emitCertificate = true;
  // verify inputs
  std::vector<std::string> telescoperText;
  std::string certificateText;
};

CaseTag parseCase(const std::string& s) {
  if (s == "shift") return CaseTag::Shift;
  if (s == "qshift") return CaseTag::QShift;
  throw CLI::ValidationError("--case", "must be 'shift' or 'qshift'");
}

std::vector<QProperQuad> parseQuads(const json& a) {
  std::vector<QProperQuad> r;
  for (auto& t : a) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("qproper: quads must be [a, b, c] triples");
    r.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return r;
}

void loadInput(Job& job, const json& j) {
  if (j.contains("case")) job.tag = parseCase(j.at("case").get<std::string>());
  const json& in = j.contains("input") ? j.at("input") : j;
  bool haveQuot = in.contains("fx") || in.contains("fy");
  bool haveDesc = in.contains("qproper");
  if (haveQuot && haveDesc)
    throw std::runtime_error("job: give either fx/fy or a qproper descriptor");
  if (haveQuot) {
    job.fx = parseRatFunc(in.at("fx").get<std::string>(), job.tag);
    job.fy = parseRatFunc(in.at("fy").get<std::string>(), job.tag);
  } else if (haveDesc) {
    if (job.tag != CaseTag::QShift)
      throw std::runtime_error("job: qproper input requires the qshift case");
    const json& d = in.at("qproper");
    QProperDescriptor desc;
    if (d.contains("p"))
      desc.p = parseRatFunc(d.at("p").get<std::string>(), job.tag);
    if (d.contains("xi")) {
      RatFunc xi = parseRatFunc(d.at("xi").get<std::string>(), job.tag);
      if (!xi.isConstant())
        throw std::runtime_error("qproper: xi must be a rational constant");
      desc.xi = xi.scalar();
    }
    if (d.contains("gamma")) desc.gamma = d.at("gamma").get<int>();
    if (d.contains("alphas")) desc.alphas = parseQuads(d.at("alphas"));
    if (d.contains("betas")) desc.betas = parseQuads(d.at("betas"));
    if (d.contains("mus")) desc.mus = parseQuads(d.at("mus"));
    if (d.contains("nus")) desc.nus = parseQuads(d.at("nus"));
    auto [fx, fy] = compileQProper(desc);
    job.fx = fx;
    job.fy = fy;
    job.qproper = desc;
  } else {
    throw std::runtime_error("job: missing input (fx/fy or qproper)");
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("max_order")) job.maxOrder = o.at("max_order").get<int>();
    if (o.contains("emit_certificate"))
      job.emitCertificate = o.at("emit_certificate").get<bool>();
  }
  if (j.contains("telescoper"))
    job.telescoperText = j.at("telescoper").get<std::vector<std::string>>();
  if (j.contains("certificate"))
    job.certificateText = j.at("certificate").get<std::string>();
  if (j.contains("command")) job.command = j.at("command").get<std::string>();
}

json boundsJson(const BoundReport& r) {
  json b{{"dim_complement", r.dimComplement},
         {"deg_D0", r.degD0},
         {"lower", r.lower},
         {"upper", r.upper}};
  if (r.bAz) b["b_az"] = *r.bAz;
  return b;
}

json remainderJson(const Remainder& r) {
  return json{{"h", r.h.str()},
              {"p", r.p.str()},
              {"v", r.K.den().str()},
              {"d", r.significantDenominator().str()}};
}

// result JSON + process exit code
std::pair<json, int> runJob(const Job& job) {
  if (job.command == "reduce") {
    Rnf rnf = standardizeKernel(computeRnf(job.fy, job.tag));
    ComplementBasis cb(rnf.K, job.tag);
    ReductionResult red = reduceShell(rnf.S, cb);
    return {json{{"kernel", rnf.K.str()},
                 {"shell", rnf.S.str()},
                 {"remainder", remainderJson(red.remainder)},
                 {"witness", red.witness.str()}},
            0};
  }
  if (job.command == "summable") {
    Rnf rnf = standardizeKernel(computeRnf(job.fy, job.tag));
    ComplementBasis cb(rnf.K, job.tag);
    ReductionResult red = reduceShell(rnf.S, cb);
    return {json{{"summable", red.remainder.isZero()},
                 {"witness", red.witness.str()}},
            0};
  }
  if (job.command == "telescope" || job.command == "bounds") {
    TermSpec term = validateTerm(job.fx, job.fy, job.tag);
    TelescopeResult res = findTelescoper(term, job.maxOrder);
    if (auto* n = std::get_if<NoTelescoper>(&res)) {
      return {json{{"no_telescoper", true}, {"evidence", n->evidence.str()}},
              1};
    }
    Found& f = std::get<Found>(res);
    if (job.qproper) f.bounds.bAz = azBound(*job.qproper);
    if (job.command == "bounds") return {boundsJson(f.bounds), 0};
    json out{{"order", f.telescoper.order()}, {"bounds", boundsJson(f.bounds)}};
    json coeffs = json::array();
    for (auto& c : f.telescoper.coeffs) coeffs.push_back(c.str());
    out["telescoper"] = coeffs;
    json rems = json::array();
    for (auto& r : f.remainders) rems.push_back(remainderJson(r));
    out["remainders"] = rems;
    if (job.emitCertificate) out["certificate"] = f.certificate.g.str();
    out["verified"] =
        verifyCertificate(term, f.telescoper, f.certificate, f.rnf);
    return {out, 0};
  }
  if (job.command == "verify") {
    TermSpec term = validateTerm(job.fx, job.fy, job.tag);
    if (job.telescoperText.empty())
      throw std::runtime_error("verify: missing telescoper coefficients");
    Telescoper L;
    for (auto& s : job.telescoperText) {
      RatFunc c = parseRatFunc(s, job.tag);
      if (!c.isPolynomial() || c.dependsOn(VY))
        throw std::runtime_error("verify: coefficients must be y-free "
                                 "polynomials");
      MPoly p = c.num();
      Rat sc = c.scalar();
      if (sc.get_den() != 1)
        throw std::runtime_error("verify: coefficients must have integer "
                                 "content");
      L.coeffs.push_back(p * Int(sc.get_num()));
    }
    if (job.certificateText.empty())
      throw std::runtime_error("verify: missing certificate");
    Certificate cert{parseRatFunc(job.certificateText, job.tag)};
    Rnf rnf = standardizeKernel(computeRnf(job.fy, job.tag));
    return {json{{"verified", verifyCertificate(term, L, cert, rnf)}}, 0};
  }
  throw std::runtime_error("unknown command '" + job.command + "'");
}

void printHuman(const json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n";
      printHuman(v, os, indent + 2);
    } else if (v.is_array()) {
      os << pad << k << ": [";
      bool first = true;
      for (auto& e : v) {
        if (!first) os << ", ";
        first = false;
        os << (e.is_string() ? e.get<std::string>() : e.dump());
      }
      os << "]\n";
    } else if (v.is_string()) {
      os << pad << k << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << k << ": " << v.dump() << "\n";
    }
  }
}

int emit(const json& result, int code, bool asJson) {
  if (asJson)
    std::cout << result.dump() << "\n";
  else
    printHuman(result, std::cout);
  return code;
}

int runCorpus(const std::string& dir, bool asJson) {
  namespace fs = std::filesystem;
  std::vector<fs::path> jobs;
  for (auto& e : fs::directory_iterator(dir)) {
    std::string name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > 5 &&
        name.ends_with(".json") && !name.ends_with(".expected.json"))
      jobs.push_back(e.path());
  }
  std::sort(jobs.begin(), jobs.end());
  int failures = 0;
  json report = json::array();
  for (auto& path : jobs) {
    json entry{{"job", path.filename().string()}};
    try {
      std::ifstream in(path);
      json spec = json::parse(in);
      Job job;
      loadInput(job, spec);
      auto [result, code] = runJob(job);
      fs::path expPath = path;
      expPath.replace_extension(".expected.json");
      std::ifstream exp(expPath);
      if (!exp) {
        entry["status"] = "missing expected file";
        ++failures;
      } else {
        json want = json::parse(exp);
        if (want.dump() == result.dump()) {
          entry["status"] = "ok";
        } else {
          entry["status"] = "mismatch";
          entry["got"] = result;
          entry["want"] = want;
          ++failures;
        }
      }
    } catch (const std::exception& ex) {
      entry["status"] = "error";
      entry["detail"] = ex.what();
      ++failures;
    }
    report.push_back(entry);
  }
  json summary{{"jobs", report}, {"failures", failures}};
  return emit(summary, failures == 0 ? 0 : 1, asJson);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctk: creative telescoping for (q-)hypergeometric terms"};
  app.require_subcommand(0, 1);

  std::string caseName, fxText, fyText, jobPath, corpusDir, certText;
  std::vector<std::string> telText;
  int maxOrder = -1;
  bool asJson = false, noCert = false;

  app.add_flag("--json", asJson, "machine-readable JSON output");
  app.add_option("--corpus", corpusDir, "run a directory of job files");

  std::vector<std::string> commands = {"reduce", "summable", "telescope",
                                       "bounds", "verify"};
  std::map<std::string, CLI::App*> subs;
  for (auto& c : commands) {
    CLI::App* s = app.add_subcommand(c);
    s->fallthrough();
    s->add_option("--case", caseName, "shift | qshift");
    s->add_option("--fx", fxText, "sigma_x quotient expression");
    s->add_option("--fy", fyText, "sigma_y quotient expression");
    s->add_option("--job", jobPath, "job file (JSON); '-' for stdin");
    s->add_option("--max-order", maxOrder, "cap the telescoper order");
    s->add_flag("--no-certificate", noCert, "omit the certificate");
    if (c == "verify") {
      s->add_option("--telescoper", telText, "telescoper coefficients");
      s->add_option("--certificate", certText, "certificate expression");
    }
    subs[c] = s;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (!corpusDir.empty()) return runCorpus(corpusDir, asJson);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }
    Job job;
    job.command = app.get_subcommands()[0]->get_name();
    if (!jobPath.empty() || (fxText.empty() && fyText.empty())) {
      json spec;
      if (jobPath.empty() || jobPath == "-") {
        spec = json::parse(std::cin);
      } else {
        std::ifstream in(jobPath);
        if (!in) throw std::runtime_error("cannot open job file " + jobPath);
        spec = json::parse(in);
      }
      std::string cmd = job.command;
      loadInput(job, spec);
      job.command = cmd;  // the subcommand wins over the job's command field
    } else {
      if (caseName.empty()) {
        std::cerr << "error: --case is required\n";
        return 2;
      }
      job.tag = parseCase(caseName);
      if (fxText.empty() || fyText.empty()) {
        std::cerr << "error: both --fx and --fy are required\n";
        return 2;
      }
      job.fx = parseRatFunc(fxText, job.tag);
      job.fy = parseRatFunc(fyText, job.tag);
    }
    if (maxOrder >= 0) job.maxOrder = maxOrder;
    if (noCert) job.emitCertificate = false;
    job.telescoperText.insert(job.telescoperText.end(), telText.begin(),
                              telText.end());
    if (!certText.empty()) job.certificateText = certText;
    auto [result, code] = runJob(job);
    return emit(result, code, asJson);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", "failed"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
