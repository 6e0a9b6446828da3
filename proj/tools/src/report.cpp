// Copyright 2026 The quncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quncert_cli/report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "quncert_cli/cli.hpp"

namespace quncert::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

Check make(std::string name, double lhs, double rhs, double slack, std::string relation, bool ok) {
    Check c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = slack;
    c.relation = std::move(relation);
    c.verdict = ok ? Verdict::kPass : Verdict::kFail;
    return c;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::kPass:
            return "pass";
        case Verdict::kFail:
            return "fail";
        case Verdict::kInconclusive:
            break;
    }
    return "inconclusive";
}

Check Check::at_least(std::string name, double lhs, double rhs, double tol) {
    // inf >= inf holds; the subtraction would give nan.
    const double slack = lhs == rhs ? 0.0 : lhs - rhs;
    return make(std::move(name), lhs, rhs, slack, ">=", slack >= -tol);
}

Check Check::at_most(std::string name, double lhs, double rhs) {
    const double slack = lhs == rhs ? 0.0 : rhs - lhs;
    return make(std::move(name), lhs, rhs, slack, "<=", slack >= 0.0);
}

Check Check::below(std::string name, double lhs, double rhs) {
    const double slack = lhs == rhs ? 0.0 : rhs - lhs;
    return make(std::move(name), lhs, rhs, slack, "<", lhs < rhs);
}

Check Check::near(std::string name, double value, double target, double tol) {
    const double err = std::abs(value - target);
    // nan (e.g. an infinite value) must fail.
    return make(std::move(name), err, tol, tol - err, "<=", err <= tol);
}

Check Check::equal(std::string name, double lhs, double rhs) {
    return make(std::move(name), lhs, rhs, 0.0, "==", lhs == rhs);
}

Check Check::inconclusive(std::string name, std::string detail) {
    Check c;
    c.name = std::move(name);
    c.lhs = std::nan("");
    c.rhs = std::nan("");
    c.slack = std::nan("");
    c.relation = "n/a";
    c.verdict = Verdict::kInconclusive;
    c.detail = std::move(detail);
    return c;
}

Verdict Report::overall() const {
    bool inconclusive = false;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::kFail) return Verdict::kFail;
        inconclusive |= c.verdict == Verdict::kInconclusive;
    }
    return inconclusive ? Verdict::kInconclusive : Verdict::kPass;
}

int Report::exit_status() const {
    switch (overall()) {
        case Verdict::kPass:
            return kExitPass;
        case Verdict::kFail:
            return kExitCheckFailure;
        case Verdict::kInconclusive:
            break;
    }
    return kExitInconclusive;
}

std::string Report::to_json() const {
    Json doc;
    doc["suite"] = suite;
    doc["tool"] = "quncert";
    doc["version"] = version();
    doc["seed"] = seed;
    doc["scenario"] = scenario;
    doc["input_digest"] = input_digest;
    Json list = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["lhs"] = number(c.lhs);
        j["rhs"] = number(c.rhs);
        j["slack"] = number(c.slack);
        j["relation"] = c.relation;
        j["verdict"] = to_string(c.verdict);
        if (!c.detail.empty()) {
            j["detail"] = c.detail;
        }
        list.push_back(std::move(j));
    }
    doc["checks"] = std::move(list);
    doc["overall"] = to_string(overall());
    return doc.dump(2) + "\n";
}

std::string sha256_hex(const std::string& bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
        throw std::runtime_error("sha256: OpenSSL digest failed");
    }
    std::string hex;
    hex.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

}  // namespace quncert::cli
