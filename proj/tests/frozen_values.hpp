#pragma once

// Values computed on the oracle path only (dense elimination per prime
// power, left-tree parametrization, unreduced subgroup families), then
// frozen. The unit tests hold both paths to them.

namespace frozen {

struct ShaValue {
  const char* group;
  const char* coeff;
  const char* kind;
  const char* value;
};

struct H2Value {
  const char* group;
  const char* coeff;
  const char* value;
};

inline constexpr ShaValue kSha2[] = {
    {"C2xC2", "q", "cyclic", "[2]"},
    {"C2xC2", "q", "bicyclic", "[]"},
    {"C2xC2", "q", "abelian", "[]"},
    {"C2xC2", "2", "cyclic", "[]"},
    {"C2xC2", "2", "bicyclic", "[]"},
    {"C2xC2", "2", "abelian", "[]"},
    {"C2xC2", "3", "cyclic", "[]"},
    {"C2xC2", "3", "bicyclic", "[]"},
    {"C2xC2", "3", "abelian", "[]"},
    {"C2xC2", "4", "cyclic", "[2]"},
    {"C2xC2", "4", "bicyclic", "[]"},
    {"C2xC2", "4", "abelian", "[]"},
    {"C4", "q", "cyclic", "[]"},
    {"C4", "q", "bicyclic", "[]"},
    {"C4", "q", "abelian", "[]"},
    {"C4", "2", "cyclic", "[]"},
    {"C4", "2", "bicyclic", "[]"},
    {"C4", "2", "abelian", "[]"},
    {"C4", "3", "cyclic", "[]"},
    {"C4", "3", "bicyclic", "[]"},
    {"C4", "3", "abelian", "[]"},
    {"C4", "4", "cyclic", "[]"},
    {"C4", "4", "bicyclic", "[]"},
    {"C4", "4", "abelian", "[]"},
    {"C2xC4", "q", "cyclic", "[2]"},
    {"C2xC4", "q", "bicyclic", "[]"},
    {"C2xC4", "q", "abelian", "[]"},
    {"C2xC4", "2", "cyclic", "[2]"},
    {"C2xC4", "2", "bicyclic", "[]"},
    {"C2xC4", "2", "abelian", "[]"},
    {"C2xC4", "3", "cyclic", "[]"},
    {"C2xC4", "3", "bicyclic", "[]"},
    {"C2xC4", "3", "abelian", "[]"},
    {"C2xC4", "4", "cyclic", "[2]"},
    {"C2xC4", "4", "bicyclic", "[]"},
    {"C2xC4", "4", "abelian", "[]"},
    {"D4", "q", "cyclic", "[2]"},
    {"D4", "q", "bicyclic", "[]"},
    {"D4", "q", "abelian", "[]"},
    {"D4", "2", "cyclic", "[]"},
    {"D4", "2", "bicyclic", "[]"},
    {"D4", "2", "abelian", "[]"},
    {"D4", "3", "cyclic", "[]"},
    {"D4", "3", "bicyclic", "[]"},
    {"D4", "3", "abelian", "[]"},
    {"D4", "4", "cyclic", "[]"},
    {"D4", "4", "bicyclic", "[]"},
    {"D4", "4", "abelian", "[]"},
    {"Q8", "q", "cyclic", "[]"},
    {"Q8", "q", "bicyclic", "[]"},
    {"Q8", "q", "abelian", "[]"},
    {"Q8", "2", "cyclic", "[2,2]"},
    {"Q8", "2", "bicyclic", "[2,2]"},
    {"Q8", "2", "abelian", "[2,2]"},
    {"Q8", "3", "cyclic", "[]"},
    {"Q8", "3", "bicyclic", "[]"},
    {"Q8", "3", "abelian", "[]"},
    {"Q8", "4", "cyclic", "[]"},
    {"Q8", "4", "bicyclic", "[]"},
    {"Q8", "4", "abelian", "[]"},
    {"S3", "q", "cyclic", "[]"},
    {"S3", "q", "bicyclic", "[]"},
    {"S3", "q", "abelian", "[]"},
    {"S3", "2", "cyclic", "[]"},
    {"S3", "2", "bicyclic", "[]"},
    {"S3", "2", "abelian", "[]"},
    {"S3", "3", "cyclic", "[]"},
    {"S3", "3", "bicyclic", "[]"},
    {"S3", "3", "abelian", "[]"},
    {"S3", "4", "cyclic", "[]"},
    {"S3", "4", "bicyclic", "[]"},
    {"S3", "4", "abelian", "[]"},
    {"D6", "q", "cyclic", "[2]"},
    {"D6", "q", "bicyclic", "[]"},
    {"D6", "q", "abelian", "[]"},
    {"D6", "2", "cyclic", "[]"},
    {"D6", "2", "bicyclic", "[]"},
    {"D6", "2", "abelian", "[]"},
    {"D6", "3", "cyclic", "[]"},
    {"D6", "3", "bicyclic", "[]"},
    {"D6", "3", "abelian", "[]"},
    {"D6", "4", "cyclic", "[2]"},
    {"D6", "4", "bicyclic", "[]"},
    {"D6", "4", "abelian", "[]"},
    {"A4", "q", "cyclic", "[2]"},
    {"A4", "q", "bicyclic", "[]"},
    {"A4", "q", "abelian", "[]"},
    {"A4", "2", "cyclic", "[]"},
    {"A4", "2", "bicyclic", "[]"},
    {"A4", "2", "abelian", "[]"},
    {"A4", "3", "cyclic", "[]"},
    {"A4", "3", "bicyclic", "[]"},
    {"A4", "3", "abelian", "[]"},
    {"A4", "4", "cyclic", "[2]"},
    {"A4", "4", "bicyclic", "[]"},
    {"A4", "4", "abelian", "[]"},
    {"C2xC2xC2", "q", "cyclic", "[2,2,2]"},
    {"C2xC2xC2", "q", "bicyclic", "[]"},
    {"C2xC2xC2", "q", "abelian", "[]"},
    {"C2xC2xC2", "2", "cyclic", "[]"},
    {"C2xC2xC2", "2", "bicyclic", "[]"},
    {"C2xC2xC2", "2", "abelian", "[]"},
    {"C2xC2xC2", "3", "cyclic", "[]"},
    {"C2xC2xC2", "3", "bicyclic", "[]"},
    {"C2xC2xC2", "3", "abelian", "[]"},
    {"C2xC2xC2", "4", "cyclic", "[2,2,2]"},
    {"C2xC2xC2", "4", "bicyclic", "[]"},
    {"C2xC2xC2", "4", "abelian", "[]"},
    {"C3xC3", "q", "cyclic", "[3]"},
    {"C3xC3", "q", "bicyclic", "[]"},
    {"C3xC3", "q", "abelian", "[]"},
    {"C3xC3", "2", "cyclic", "[]"},
    {"C3xC3", "2", "bicyclic", "[]"},
    {"C3xC3", "2", "abelian", "[]"},
    {"C3xC3", "3", "cyclic", "[3]"},
    {"C3xC3", "3", "bicyclic", "[]"},
    {"C3xC3", "3", "abelian", "[]"},
    {"C3xC3", "4", "cyclic", "[]"},
    {"C3xC3", "4", "bicyclic", "[]"},
    {"C3xC3", "4", "abelian", "[]"},
    {"Q16", "q", "cyclic", "[]"},
    {"Q16", "q", "bicyclic", "[]"},
    {"Q16", "q", "abelian", "[]"},
    {"Q16", "2", "cyclic", "[2,2]"},
    {"Q16", "2", "bicyclic", "[2,2]"},
    {"Q16", "2", "abelian", "[2,2]"},
    {"Q16", "3", "cyclic", "[]"},
    {"Q16", "3", "bicyclic", "[]"},
    {"Q16", "3", "abelian", "[]"},
    {"Q16", "4", "cyclic", "[]"},
    {"Q16", "4", "bicyclic", "[]"},
    {"Q16", "4", "abelian", "[]"},
    {"S4", "q", "cyclic", "[2]"},
    {"S4", "q", "bicyclic", "[]"},
    {"S4", "q", "abelian", "[]"},
    {"S4", "2", "cyclic", "[]"},
    {"S4", "2", "bicyclic", "[]"},
    {"S4", "2", "abelian", "[]"},
    {"S4", "3", "cyclic", "[]"},
    {"S4", "3", "bicyclic", "[]"},
    {"S4", "3", "abelian", "[]"},
    {"S4", "4", "cyclic", "[]"},
    {"S4", "4", "bicyclic", "[]"},
    {"S4", "4", "abelian", "[]"},
    {"D8", "q", "cyclic", "[2]"},
    {"D8", "q", "bicyclic", "[]"},
    {"D8", "q", "abelian", "[]"},
    {"D8", "2", "cyclic", "[]"},
    {"D8", "2", "bicyclic", "[]"},
    {"D8", "2", "abelian", "[]"},
    {"D8", "3", "cyclic", "[]"},
    {"D8", "3", "bicyclic", "[]"},
    {"D8", "3", "abelian", "[]"},
    {"D8", "4", "cyclic", "[]"},
    {"D8", "4", "bicyclic", "[]"},
    {"D8", "4", "abelian", "[]"},
    {"C2xC2xC4", "q", "cyclic", "[2,2,2]"},
    {"C2xC2xC4", "q", "bicyclic", "[]"},
    {"C2xC2xC4", "q", "abelian", "[]"},
    {"C2xC2xC4", "2", "cyclic", "[2,2]"},
    {"C2xC2xC4", "2", "bicyclic", "[]"},
    {"C2xC2xC4", "2", "abelian", "[]"},
    {"C2xC2xC4", "3", "cyclic", "[]"},
    {"C2xC2xC4", "3", "bicyclic", "[]"},
    {"C2xC2xC4", "3", "abelian", "[]"},
    {"C2xC2xC4", "4", "cyclic", "[2,2,2]"},
    {"C2xC2xC4", "4", "bicyclic", "[]"},
    {"C2xC2xC4", "4", "abelian", "[]"},
    {"Heis3", "q", "cyclic", "[3,3]"},
    {"Heis3", "q", "bicyclic", "[]"},
    {"Heis3", "q", "abelian", "[]"},
    {"Heis3", "2", "cyclic", "[]"},
    {"Heis3", "2", "bicyclic", "[]"},
    {"Heis3", "2", "abelian", "[]"},
    {"Heis3", "3", "cyclic", "[]"},
    {"Heis3", "3", "bicyclic", "[]"},
    {"Heis3", "3", "abelian", "[]"},
    {"Heis3", "4", "cyclic", "[]"},
    {"Heis3", "4", "bicyclic", "[]"},
    {"Heis3", "4", "abelian", "[]"},
};

inline constexpr H2Value kH2[] = {
    {"C2xC2", "q", "[2]"},
    {"C2xC2", "2", "[2,2,2]"},
    {"C2xC2", "3", "[]"},
    {"C2xC2", "4", "[2,2,2]"},
    {"C2xC2", "6", "[2,2,2]"},
    {"C4", "q", "[]"},
    {"C4", "2", "[2]"},
    {"C4", "3", "[]"},
    {"C4", "4", "[4]"},
    {"C4", "6", "[2]"},
    {"C2xC4", "q", "[2]"},
    {"C2xC4", "2", "[2,2,2]"},
    {"C2xC4", "3", "[]"},
    {"C2xC4", "4", "[2,2,4]"},
    {"C2xC4", "6", "[2,2,2]"},
    {"D4", "q", "[2]"},
    {"D4", "2", "[2,2,2]"},
    {"D4", "3", "[]"},
    {"D4", "4", "[2,2,2]"},
    {"D4", "6", "[2,2,2]"},
    {"Q8", "q", "[]"},
    {"Q8", "2", "[2,2]"},
    {"Q8", "3", "[]"},
    {"Q8", "4", "[2,2]"},
    {"Q8", "6", "[2,2]"},
    {"S3", "q", "[]"},
    {"S3", "2", "[2]"},
    {"S3", "3", "[]"},
    {"S3", "4", "[2]"},
    {"S3", "6", "[2]"},
    {"D6", "q", "[2]"},
    {"D6", "2", "[2,2,2]"},
    {"D6", "3", "[]"},
    {"D6", "4", "[2,2,2]"},
    {"D6", "6", "[2,2,2]"},
    {"A4", "q", "[2]"},
    {"A4", "2", "[2]"},
    {"A4", "3", "[3]"},
    {"A4", "4", "[2]"},
    {"A4", "6", "[6]"},
    {"C2xC2xC2", "q", "[2,2,2]"},
    {"C2xC2xC2", "2", "[2,2,2,2,2,2]"},
    {"C2xC2xC2", "3", "[]"},
    {"C2xC2xC2", "4", "[2,2,2,2,2,2]"},
    {"C2xC2xC2", "6", "[2,2,2,2,2,2]"},
    {"C3xC3", "q", "[3]"},
    {"C3xC3", "2", "[]"},
    {"C3xC3", "3", "[3,3,3]"},
    {"C3xC3", "4", "[]"},
    {"C3xC3", "6", "[3,3,3]"},
    {"Q16", "q", "[]"},
    {"Q16", "2", "[2,2]"},
    {"Q16", "3", "[]"},
    {"Q16", "4", "[2,2]"},
    {"Q16", "6", "[2,2]"},
    {"S4", "q", "[2]"},
    {"S4", "2", "[2,2]"},
    {"S4", "3", "[]"},
    {"S4", "4", "[2,2]"},
    {"S4", "6", "[2,2]"},
    {"D8", "q", "[2]"},
    {"D8", "2", "[2,2,2]"},
    {"D8", "3", "[]"},
    {"D8", "4", "[2,2,2]"},
    {"D8", "6", "[2,2,2]"},
    {"C2xC2xC4", "q", "[2,2,2]"},
    {"C2xC2xC4", "2", "[2,2,2,2,2,2]"},
    {"C2xC2xC4", "3", "[]"},
    {"C2xC2xC4", "4", "[2,2,2,2,2,4]"},
    {"C2xC2xC4", "6", "[2,2,2,2,2,2]"},
    {"Heis3", "q", "[3,3]"},
    {"Heis3", "2", "[]"},
    {"Heis3", "3", "[3,3,3,3]"},
    {"Heis3", "4", "[]"},
    {"Heis3", "6", "[3,3,3,3]"},
};

}  // namespace frozen
