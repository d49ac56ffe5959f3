// Generated by scripts/gen_kpss_reference.py — do not edit by hand.
// Reference statistics from statsmodels.tsa.stattools.kpss
// (regression='c', nlags=floor(4*(n/100)^0.25)).
#pragma once

#include <cstdint>

namespace radar_test {

struct KpssReferenceCase {
    const char* kind;  // constant | noise | trend | walk
    std::uint64_t seed;
    double param;      // constant value or trend slope
    double stat;       // NaN when the reference is undefined
    bool stationary;   // verdict at the 5% level
};

inline constexpr int kKpssReferenceLength = 200;

inline constexpr KpssReferenceCase kKpssReference[] = {
    {"constant", 0ULL, 1, 0.0 / 0.0, true},
    {"constant", 0ULL, 2.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 4, 0.0 / 0.0, true},
    {"constant", 0ULL, 5.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 7, 0.0 / 0.0, true},
    {"constant", 0ULL, 8.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 10, 0.0 / 0.0, true},
    {"constant", 0ULL, 11.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 13, 0.0 / 0.0, true},
    {"constant", 0ULL, 14.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 16, 0.0 / 0.0, true},
    {"constant", 0ULL, 17.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 19, 0.0 / 0.0, true},
    {"constant", 0ULL, 20.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 22, 0.0 / 0.0, true},
    {"constant", 0ULL, 23.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 25, 0.0 / 0.0, true},
    {"constant", 0ULL, 26.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 28, 0.0 / 0.0, true},
    {"constant", 0ULL, 29.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 31, 0.0 / 0.0, true},
    {"constant", 0ULL, 32.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 34, 0.0 / 0.0, true},
    {"constant", 0ULL, 35.5, 0.0 / 0.0, true},
    {"constant", 0ULL, 37, 0.0 / 0.0, true},
    {"noise", 1000ULL, 0, 0.10717301807606069, true},
    {"noise", 1001ULL, 0, 0.27744593342256296, true},
    {"noise", 1002ULL, 0, 0.15243383072571146, true},
    {"noise", 1003ULL, 0, 0.13523519200912495, true},
    {"noise", 1004ULL, 0, 0.088181104209052716, true},
    {"noise", 1005ULL, 0, 0.10148390212652424, true},
    {"noise", 1006ULL, 0, 0.51291253515179769, false},
    {"noise", 1007ULL, 0, 0.035501755590855895, true},
    {"noise", 1008ULL, 0, 0.095526034288528933, true},
    {"noise", 1009ULL, 0, 0.10570617639270115, true},
    {"noise", 1010ULL, 0, 0.13328473279108236, true},
    {"noise", 1011ULL, 0, 0.067984357794750538, true},
    {"noise", 1012ULL, 0, 0.17772432741779998, true},
    {"noise", 1013ULL, 0, 0.083816698344027996, true},
    {"noise", 1014ULL, 0, 0.15950839466150837, true},
    {"noise", 1015ULL, 0, 0.13884388445768717, true},
    {"noise", 1016ULL, 0, 0.49838192862698899, false},
    {"noise", 1017ULL, 0, 0.1061314974455312, true},
    {"noise", 1018ULL, 0, 0.64823499080002678, false},
    {"noise", 1019ULL, 0, 0.076753514114907259, true},
    {"noise", 1020ULL, 0, 0.1305637020472826, true},
    {"noise", 1021ULL, 0, 0.090976662721009141, true},
    {"noise", 1022ULL, 0, 0.067185985667096049, true},
    {"noise", 1023ULL, 0, 0.056761423919848959, true},
    {"noise", 1024ULL, 0, 0.11962405954189886, true},
    {"trend", 2000ULL, 0.050000000000000003, 4.0636622088555736, false},
    {"trend", 2001ULL, 0.10000000000000001, 4.0851102738720426, false},
    {"trend", 2002ULL, 0.15000000000000002, 4.0936946256804463, false},
    {"trend", 2003ULL, 0.20000000000000001, 4.0972220867446678, false},
    {"trend", 2004ULL, 0.25, 4.0966261946745579, false},
    {"trend", 2005ULL, 0.30000000000000004, 4.0989345278347962, false},
    {"trend", 2006ULL, 0.35000000000000003, 4.0981345172329577, false},
    {"trend", 2007ULL, 0.40000000000000002, 4.0984435913681798, false},
    {"trend", 2008ULL, 0.45000000000000001, 4.0984741296162834, false},
    {"trend", 2009ULL, 0.5, 4.0981126251925923, false},
    {"trend", 2010ULL, 0.55000000000000004, 4.0992348788073265, false},
    {"trend", 2011ULL, 0.60000000000000009, 4.0981979236687032, false},
    {"trend", 2012ULL, 0.65000000000000002, 4.0983408096354799, false},
    {"trend", 2013ULL, 0.70000000000000007, 4.0985632162738792, false},
    {"trend", 2014ULL, 0.75, 4.0981404625556497, false},
    {"trend", 2015ULL, 0.80000000000000004, 4.0989765727533847, false},
    {"trend", 2016ULL, 0.85000000000000009, 4.0987558964579955, false},
    {"trend", 2017ULL, 0.90000000000000002, 4.0978695245119221, false},
    {"trend", 2018ULL, 0.95000000000000007, 4.0984335910451826, false},
    {"trend", 2019ULL, 1, 4.0983065213561201, false},
    {"trend", 2020ULL, 1.05, 4.0980111033402062, false},
    {"trend", 2021ULL, 1.1000000000000001, 4.0987102945040528, false},
    {"trend", 2022ULL, 1.1500000000000001, 4.0980613045584837, false},
    {"trend", 2023ULL, 1.2000000000000002, 4.0982971927738543, false},
    {"trend", 2024ULL, 1.25, 4.0973212544798017, false},
    {"walk", 3000ULL, 0, 2.9534833977413193, false},
    {"walk", 3001ULL, 0, 1.545630975699994, false},
    {"walk", 3002ULL, 0, 2.2507874433153319, false},
    {"walk", 3003ULL, 0, 2.4828093290589366, false},
    {"walk", 3004ULL, 0, 1.7965029768671079, false},
    {"walk", 3005ULL, 0, 1.3822115537747559, false},
    {"walk", 3006ULL, 0, 1.4007277087019849, false},
    {"walk", 3007ULL, 0, 0.56564729863401231, false},
    {"walk", 3008ULL, 0, 2.5774631476830994, false},
    {"walk", 3009ULL, 0, 3.8089497297690431, false},
    {"walk", 3010ULL, 0, 0.95207760060141156, false},
    {"walk", 3011ULL, 0, 3.7460545266776606, false},
    {"walk", 3012ULL, 0, 1.6215335100560544, false},
    {"walk", 3013ULL, 0, 1.2108857222910865, false},
    {"walk", 3014ULL, 0, 3.5567734288688539, false},
    {"walk", 3015ULL, 0, 2.0252484481211388, false},
    {"walk", 3016ULL, 0, 1.2955752952060389, false},
    {"walk", 3017ULL, 0, 1.7474731296111183, false},
    {"walk", 3018ULL, 0, 1.259577123886195, false},
    {"walk", 3019ULL, 0, 0.85037217560230194, false},
    {"walk", 3020ULL, 0, 2.7590313507144066, false},
    {"walk", 3021ULL, 0, 0.80370842496745831, false},
    {"walk", 3022ULL, 0, 3.8362548102329512, false},
    {"walk", 3023ULL, 0, 1.395633453899676, false},
    {"walk", 3024ULL, 0, 3.712958401691024, false},
};

// y_i = i, i = 0..199
inline constexpr double kKpssStatLinearRamp = 4.0984525324194765;
// white noise, seed 42
inline constexpr double kKpssStatNoiseSeed42 = 0.048562646900422321;

}  // namespace radar_test
