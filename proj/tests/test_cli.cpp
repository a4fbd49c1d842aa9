#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pglind/cli.hpp"

using namespace pglind;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pglind");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"decompose", "--q", "3", "--n", "2", "--subgroup", "pgo-", "--label", "1/2:[1,1]"}).code == kExitOk);
  CHECK(run({"decompose", "--q", "4", "--n", "2", "--subgroup", "pgsp"}).code == kExitArgument);
  CHECK(run({"decompose", "--q", "3", "--n", "3", "--subgroup", "pgsp"}).code == kExitArgument);
  CHECK(run({"decompose", "--q", "3", "--n", "2", "--subgroup", "gl"}).code == kExitArgument);
  CHECK(run({"decompose", "--q", "3", "--n", "2", "--subgroup", "pgsp", "--label", "0/1:[1]"}).code ==
        kExitArgument);
  CHECK(run({"decompose", "--q", "3", "--n", "2", "--subgroup", "pgsp", "--label", "1/8:[1]"}).code ==
        kExitArgument);
  CHECK(run({"decompose", "--q", "3", "--n", "2", "--subgroup", "pgsp", "--format", "xml"}).code == kExitArgument);
  CHECK(run({"decompose", "--q", "3"}).code == kExitArgument);
  CHECK(run({"nonsense"}).code == kExitArgument);
  CHECK(run({}).code == kExitArgument);
  CHECK(run({"verify-identities", "--max-size", "99"}).code == kExitCapacity);
  CHECK(run({"dcosets", "--q", "3", "--n", "4"}).code == kExitCapacity);
  CHECK(run({"forms", "--q", "9", "--n", "2"}).code == kExitArgument);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("single label output") {
  const auto r = run({"decompose", "--q", "3", "--n", "2", "--subgroup", "pgo-", "--label", "1/2:[1,1]", "--format",
                      "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["label"] == "1/2:[1,1]");
  CHECK(j["rows"][0]["mult"] == 0);
}

TEST_CASE("json report agrees with the table") {
  const std::vector<std::string> base{"decompose", "--q", "5", "--n", "2", "--subgroup", "pgo+", "--degrees"};
  auto with = [&](std::string fmt) {
    auto a = base;
    a.push_back("--format");
    a.push_back(fmt);
    return run(a);
  };
  const auto json = with("json");
  const auto table = with("table");
  const auto csv = with("csv");
  REQUIRE(json.code == kExitOk);
  REQUIRE(table.code == kExitOk);
  REQUIRE(csv.code == kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["q"] == 5);
  CHECK(j["n"] == 2);
  CHECK(j["subgroup"] == "pgo+");
  CHECK(j["totals"]["sum_md"] == 15);
  CHECK(table.out.find("sum_md = 15") != std::string::npos);
  CHECK(csv.out.rfind("label,mult,degree", 0) == 0);
  for (const auto& row : j["rows"]) {
    const std::string name = row["label"];
    CHECK(table.out.find(name) != std::string::npos);
    CHECK(csv.out.find("\"" + name + "\"") != std::string::npos);
  }
  std::int64_t m2 = 0;
  for (const auto& row : j["rows"]) m2 += row["mult"].get<std::int64_t>() * row["mult"].get<std::int64_t>();
  CHECK(j["totals"]["sum_m2"] == m2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"decompose", "--q", "5", "--n", "4", "--subgroup", "pgo-", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("other subcommands") {
  const auto v = run({"verify-identities", "--max-size", "5", "--format", "json"});
  REQUIRE(v.code == kExitOk);
  const auto vj = nlohmann::json::parse(v.out);
  CHECK(vj["failures"] == 0);
  CHECK(vj["checked"] == 4 * (1 + 2 + 3 + 5 + 7));

  const auto c = run({"cross-check", "--q", "3", "--n", "4", "--format", "json"});
  REQUIRE(c.code == kExitOk);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["disagreements"].empty());
  CHECK(cj["labels_checked"] == cj["labels_total"]);

  const auto o = run({"orders", "--q", "3", "--n", "2", "--format", "json"});
  REQUIRE(o.code == kExitOk);
  CHECK(nlohmann::json::parse(o.out)["pgl"] == 24);

  const auto d = run({"dcosets", "--q", "5", "--n", "2", "--format", "json"});
  REQUIRE(d.code == kExitOk);
  CHECK(nlohmann::json::parse(d.out)["double_cosets"] == 4);
  const auto mixed = run({"dcosets", "--q", "3", "--n", "2", "--h1", "pgsp", "--h2", "pgo-"});
  CHECK(mixed.code == kExitOk);

  const auto f = run({"forms", "--q", "3", "--n", "2", "--format", "json"});
  REQUIRE(f.code == kExitOk);
  const auto fj = nlohmann::json::parse(f.out);
  REQUIRE(fj["orbits"].size() == 3);
  CHECK(fj["orbits"][1]["size"] == 6);
}

TEST_CASE("cache flag and environment variable") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto flag_path = (dir / "pglind_cli_flag_cache.json").string();
  const auto env_path = (dir / "pglind_cli_env_cache.json").string();
  std::filesystem::remove(flag_path);
  std::filesystem::remove(env_path);
  const std::vector<std::string> args{"decompose", "--q", "3", "--n", "4", "--subgroup", "pgo+"};

  const auto plain = run(args);
  ::setenv(kCacheEnvVar, env_path.c_str(), 1);
  const auto via_env = run(args);
  CHECK(std::filesystem::exists(env_path));
  auto with_flag = args;
  with_flag.push_back("--cache");
  with_flag.push_back(flag_path);
  const auto via_flag = run(with_flag);
  CHECK(std::filesystem::exists(flag_path));
  const auto reload = run(with_flag);
  ::unsetenv(kCacheEnvVar);

  CHECK(via_env.out == plain.out);
  CHECK(via_flag.out == plain.out);
  CHECK(reload.out == plain.out);

  std::ofstream(flag_path) << "{\"format_version\": 999, \"tables\": {}}";
  CHECK(run(with_flag).code == kExitArgument);
  std::filesystem::remove(flag_path);
  std::filesystem::remove(env_path);
}

TEST_CASE("installed binary exit status") {
  const std::string bin = PGLIND_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("orders --q 3 --n 2") == kExitOk);
  CHECK(status("orders --q 6 --n 2") == kExitArgument);
  CHECK(status("verify-identities --max-size 12") == kExitCapacity);
}
