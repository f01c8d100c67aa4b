#pragma once

// Generated by gen_fixtures.py (mpmath, 60 significant digits).
// Do not edit by hand; regenerate instead.

namespace mlpd_fixtures {

struct OracleEval {
  const char* family;
  double a_re, a_im;    // alpha or alpha1
  double b_re, b_im;    // beta or beta1
  double g_re, g_im;    // gamma
  double a2_re, a2_im;  // alpha2
  double b2_re, b2_im;  // beta2
  int target;           // -1 none; else alpha,beta,gamma,alpha1,beta1,alpha2,beta2
  double z_re, z_im;
  double val_re, val_im;
};

inline constexpr OracleEval kOracleEvals[] = {
  {"ml2", 0.8, 0.0, 1.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.5, 0.5, 1.4935210786308442, 0.860498962195222},
  {"ml2", 0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -2.0, 0.0, 0.25539567631050575, 0.0},
  {"ml2", 2.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 1.5, -0.7, 1.8478431948388465, -0.722874706393151},
  {"ml2", 1.0, 0.3, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 1.2, 0.4, 4.032313274580007, 0.34592080635298156},
  {"ml2", 0.7, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -0.8, 0.6, -0.10602046551132636, 0.5872983385250137},
  {"ml2", 1.4, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 2.2, 0.0, 1.3245355457401848, 0.0},
  {"ml2", 0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.0, 0.9, -0.4755002070255891, 0.06307745604451319},
  {"ml2", 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -2.5, 0.0, 0.0820849986238988, 0.0},
  {"ml2", 1.7, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.702, 0.383, 1.4888155945313253, 0.30469040747242804},
  {"ml3", 0.9, 0.0, 1.1, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.5, 0.5, 1.6394216246342694, 1.3726413847620873},
  {"ml3", 1.2, 0.0, 0.8, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -1.0, 0.5, -0.33495828497549424, 0.19763678516200417},
  {"ml3", 0.7, 0.0, 1.0, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0, -1, 1.1, 0.0, 1.938447641291342, 1.5802701855413515},
  {"ml3", 1.5, 0.0, 0.5, 0.0, 3.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 2.0, -1.0, 12.260281431667044, -16.236209601375702},
  {"ml3", 0.8, 0.0, 1.3, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -0.4, -0.8, 0.7180609321900651, -0.36587619567102003},
  {"ml3", 1.1, 0.0, 0.9, 0.2, 1.2, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.6, 1.0, 1.2213215483646083, 2.1082243537227288},
  {"ml3", 2.2, 0.0, 1.0, 0.0, 1.7, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 2.4, 0.0, 2.997277485891801, 0.0},
  {"ml3", 0.6, 0.0, 1.0, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -0.9, 0.0, 0.07387137130612045, 0.0},
  {"ml4", 0.8, 0.0, 1.0, 0.0, 0.0, 0.0, 0.9, 0.0, 0.7, 0.0, -1, 0.5, 0.5, 1.3392678300136778, 0.8918662532067436},
  {"ml4", 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, -1, 1.8, 0.0, 3.791605289482982, 0.0},
  {"ml4", 0.5, 0.0, 0.6, 0.0, 0.0, 0.0, 0.7, 0.0, 1.2, 0.0, -1, -1.2, 0.3, 0.1023850403095899, 0.05216884988327371},
  {"ml4", 1.3, 0.0, 0.4, 0.1, 0.0, 0.0, 0.6, 0.0, 1.1, 0.0, -1, 0.9, -0.9, 1.3681376921407475, -1.76243064527375},
  {"ml4", -0.2, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, -1, 1.5, 0.0, 3.339566527876742, 0.0},
  {"ml4", 0.9, 0.0, 2.0, 0.0, 0.0, 0.0, 1.1, 0.0, 0.5, 0.0, -1, -2.0, 0.0, -0.20781954447159356, 0.0},
  {"wright", 0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 1.0, 0.0, 2.777345100500996, 0.0},
  {"wright", 1.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -1.5, 0.5, 0.40165220455672285, 0.14559646783156738},
  {"wright", -0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.8, 0.0, 1.4283923550466684, 0.0},
  {"wright", 0.3, 0.0, 0.7, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 1.2, 1.2, 0.7043613225768266, 4.100313801052935},
  {"wright", 2.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -0.7, -0.7, 0.03800694146233525, -0.4848479330804942},
  {"wright", 1.2, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 2.0, 0.5, 2.817878390250897, 0.5507072154453369},
  {"leroy", 1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 1.0, 0.0, 2.2795853023360673, 0.0},
  {"leroy", 0.8, 0.0, 1.2, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.5, 0.5, 1.5933238380775658, 0.764452125890139},
  {"leroy", 1.2, 0.0, 0.9, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -1.0, 0.4, 0.32033998400454555, 0.1367775823994649},
  {"leroy", 1.5, 0.0, 1.0, 0.0, 3.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 2.5, 0.0, 2.093264228482681, 0.0},
  {"leroy", 0.9, 0.0, 0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1, 0.0, 1.3, -0.5099192970022154, 0.7014764299397268},
  {"leroy", 1.1, 0.0, 1.4, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 0.0, -1, -0.6, -0.9, 1.0384896124292424, -0.40145414505094557},
  {"ml2", 1.1, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0.9, 0.3, -1.3119522945867061, -1.1934973944200644},
  {"ml2", 0.7, 0.0, 1.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1, -0.8, 0.2, 0.3273591702797364, -0.00388793829199728},
  {"ml2", 0.9, 0.0, 0.6, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1, 0.8, 0.0, 0.4423324320375254, -0.6526847200336183},
  {"ml3", 0.9, 0.0, 1.0, 0.0, 1.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0.7, -0.5, 0.10907056361403879, 2.6831802638706868},
  {"ml3", 1.3, 0.0, 0.6, 0.0, 0.9, 0.0, 0.0, 0.0, 0.0, 0.0, 1, 1.1, 0.0, 0.08420305940061264, 0.0},
  {"ml3", 0.8, 0.0, 1.1, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2, 0.5, 0.5, -0.02349492578073778, 1.600384931889132},
  {"ml4", 0.8, 0.0, 1.0, 0.0, 0.0, 0.0, 0.9, 0.0, 0.7, 0.0, 3, 0.6, 0.4, -0.32106505923440637, -0.6642162566396999},
  {"ml4", 0.8, 0.0, 1.0, 0.0, 0.0, 0.0, 0.9, 0.0, 0.7, 0.0, 4, -0.9, 0.0, 0.5090518522991153, 0.0},
  {"ml4", 1.1, 0.0, 0.5, 0.0, 0.0, 0.0, 0.6, 0.0, 1.2, 0.0, 5, 0.0, 0.8, 0.4114756100119965, -0.12528977084559997},
  {"ml4", 1.1, 0.0, 0.5, 0.0, 0.0, 0.0, 0.6, 0.0, 1.2, 0.0, 6, 1.2, -0.3, -0.8513962417042267, 0.505396124188508},
  {"wright", 0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0, 1.4, 0.0, -1.9969079287760547, 0.0},
  {"wright", 1.5, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1, -1.1, 0.6, 1.287311401737603, -0.15332781983985544},
  {"leroy", 1.0, 0.0, 1.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0.9, 0.0, -1.7006009502551382, 0.0},
  {"leroy", 0.9, 0.0, 1.2, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1, -0.5, 0.5, 1.109254480504733, -0.2342566132070815},
  {"leroy", 1.2, 0.0, 0.7, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 2, 1.0, 1.0, 1.4322881522665583, -1.2662996133178561},
};

inline constexpr double kGoldenMl2Series_re = 1.4935210786308442;
inline constexpr double kGoldenMl2Series_im = 0.860498962195222;
inline constexpr double kGoldenMbIntegrand_re = 0.024769497955488596;
inline constexpr double kGoldenMbIntegrand_im = 0.039301886584488216;
inline constexpr double kGoldenLeroyAtOne_re = 2.2795853023360673;
inline constexpr double kGoldenLeroyAtOne_im = 0.0;
inline constexpr double kGoldenMl2AlphaDeriv_re = -1.0378487276607355;
inline constexpr double kGoldenMl2AlphaDeriv_im = 0.0;
inline constexpr double kGoldenWrightBetaDeriv_re = 1.5690348530037423;
inline constexpr double kGoldenWrightBetaDeriv_im = 0.0;
inline constexpr double kGoldenLogGammaA_re = -2.359449355937571;
inline constexpr double kGoldenLogGammaA_im = -0.9169076135186698;
inline constexpr double kGoldenLogGammaB_re = 0.0008154671525182346;
inline constexpr double kGoldenLogGammaB_im = -5.926765791507547;
inline constexpr double kGoldenLogGammaCut_re = 1.2655121234846454;
inline constexpr double kGoldenLogGammaCut_im = -3.141592653589793;
inline constexpr double kGoldenDigammaA_re = 0.687523593749104;
inline constexpr double kGoldenDigammaA_im = 1.6727302110566287;
inline constexpr double kGoldenDigammaB_re = 0.7318926373545227;
inline constexpr double kGoldenDigammaB_im = 2.6406595199775147;
inline constexpr double kGoldenDigammaC_re = 3.656687973840383;
inline constexpr double kGoldenDigammaC_im = 0.8859478664343522;

}  // namespace mlpd_fixtures
