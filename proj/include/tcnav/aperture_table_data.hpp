#pragma once

// Default fixed-failure-rate difference-test thresholds, bucketed by
// (dof, strength). Generated by `tcnav calibrate-aperture` (seed 20220131,
// 100000 samples per bucket); matches data/aperture_thresholds.csv.
// Do not edit by hand.

namespace tcnav::detail {

struct ApertureTableRow {
  int dof;
  int bucket;
  double pf;
  double threshold;
};

inline constexpr ApertureTableRow kDefaultApertureTable[] = {
    {1, -6, 0.001, 9.98893299479e-07},
    {1, -6, 0.01, 9.89782724665e-07},
    {1, -5, 0.001, 9.98806274899e-06},
    {1, -5, 0.01, 9.89722606162e-06},
    {1, -4, 0.001, 9.98936193467e-05},
    {1, -4, 0.01, 9.89902819229e-05},
    {1, -3, 0.001, 0.00099898853994},
    {1, -3, 0.01, 0.000990354714306},
    {1, -2, 0.001, 0.00998947769924},
    {1, -2, 0.01, 0.0099001681287},
    {1, -1, 0.001, 0.0998951768662},
    {1, -1, 0.01, 0.0988403645112},
    {1, 0, 0.001, 0.998240041034},
    {1, 0, 0.01, 0.983244020254},
    {1, 1, 0.001, 9.48790867428},
    {1, 1, 0.01, 6.26031735456},
    {1, 2, 0.001, 0},
    {1, 2, 0.01, 0},
    {1, 3, 0.001, 0},
    {1, 3, 0.01, 0},
    {1, 4, 0.001, 0},
    {1, 4, 0.01, 0},
    {1, 5, 0.001, 0},
    {1, 5, 0.01, 0},
    {1, 6, 0.001, 0},
    {1, 6, 0.01, 0},
    {1, 7, 0.001, 0},
    {1, 7, 0.01, 0},
    {1, 8, 0.001, 0},
    {1, 8, 0.01, 0},
    {1, 9, 0.001, 0},
    {1, 9, 0.01, 0},
    {1, 10, 0.001, 0},
    {1, 10, 0.01, 0},
    {1, 11, 0.001, 0},
    {1, 11, 0.01, 0},
    {1, 12, 0.001, 0},
    {1, 12, 0.01, 0},
    {2, -6, 0.001, 9.3168915319e-07},
    {2, -6, 0.01, 8.24543621987e-07},
    {2, -5, 0.001, 9.86816346402e-06},
    {2, -5, 0.01, 7.71130407009e-06},
    {2, -4, 0.001, 9.92095431366e-05},
    {2, -4, 0.01, 8.82255379563e-05},
    {2, -3, 0.001, 0.000977898460029},
    {2, -3, 0.01, 0.000843618636476},
    {2, -2, 0.001, 0.00911127265739},
    {2, -2, 0.01, 0.0080388639654},
    {2, -1, 0.001, 0.0950693229576},
    {2, -1, 0.01, 0.0822149336117},
    {2, 0, 0.001, 0.976060694255},
    {2, 0, 0.01, 0.813519282057},
    {2, 1, 0.001, 7.68774427349},
    {2, 1, 0.01, 5.4996343119},
    {2, 2, 0.001, 0},
    {2, 2, 0.01, 0},
    {2, 3, 0.001, 0},
    {2, 3, 0.01, 0},
    {2, 4, 0.001, 0},
    {2, 4, 0.01, 0},
    {2, 5, 0.001, 0},
    {2, 5, 0.01, 0},
    {2, 6, 0.001, 0},
    {2, 6, 0.01, 0},
    {2, 7, 0.001, 0},
    {2, 7, 0.01, 0},
    {2, 8, 0.001, 0},
    {2, 8, 0.01, 0},
    {2, 9, 0.001, 0},
    {2, 9, 0.01, 0},
    {2, 10, 0.001, 0},
    {2, 10, 0.01, 0},
    {2, 11, 0.001, 0},
    {2, 11, 0.01, 0},
    {2, 12, 0.001, 0},
    {2, 12, 0.01, 0},
    {3, -6, 0.001, 8.42610743463e-07},
    {3, -6, 0.01, 6.85245586211e-07},
    {3, -5, 0.001, 8.3333427928e-06},
    {3, -5, 0.01, 6.87252691662e-06},
    {3, -4, 0.001, 8.51734195346e-05},
    {3, -4, 0.01, 7.26161983059e-05},
    {3, -3, 0.001, 0.00084112204781},
    {3, -3, 0.01, 0.000673266821108},
    {3, -2, 0.001, 0.00844925091436},
    {3, -2, 0.01, 0.00695959078262},
    {3, -1, 0.001, 0.0840281651462},
    {3, -1, 0.01, 0.0689474541401},
    {3, 0, 0.001, 0.795801331971},
    {3, 0, 0.01, 0.676890699353},
    {3, 1, 0.001, 7.09692964341},
    {3, 1, 0.01, 4.77873560445},
    {3, 2, 0.001, 5.62683154933},
    {3, 2, 0.01, 0},
    {3, 3, 0.001, 0},
    {3, 3, 0.01, 0},
    {3, 4, 0.001, 0},
    {3, 4, 0.01, 0},
    {3, 5, 0.001, 0},
    {3, 5, 0.01, 0},
    {3, 6, 0.001, 0},
    {3, 6, 0.01, 0},
    {3, 7, 0.001, 0},
    {3, 7, 0.01, 0},
    {3, 8, 0.001, 0},
    {3, 8, 0.01, 0},
    {3, 9, 0.001, 0},
    {3, 9, 0.01, 0},
    {3, 10, 0.001, 0},
    {3, 10, 0.01, 0},
    {3, 11, 0.001, 0},
    {3, 11, 0.01, 0},
    {3, 12, 0.001, 0},
    {3, 12, 0.01, 0},
    {4, -6, 0.001, 8.2029937236e-07},
    {4, -6, 0.01, 6.42432545455e-07},
    {4, -5, 0.001, 7.72293896108e-06},
    {4, -5, 0.01, 6.06132561995e-06},
    {4, -4, 0.001, 7.7507893017e-05},
    {4, -4, 0.01, 6.09419078086e-05},
    {4, -3, 0.001, 0.000802958915328},
    {4, -3, 0.01, 0.000655134149006},
    {4, -2, 0.001, 0.00777648098044},
    {4, -2, 0.01, 0.00593642543211},
    {4, -1, 0.001, 0.0695577773344},
    {4, -1, 0.01, 0.0588010019179},
    {4, 0, 0.001, 0.764607186075},
    {4, 0, 0.01, 0.558895709843},
    {4, 1, 0.001, 6.84783868786},
    {4, 1, 0.01, 4.94709221078},
    {4, 2, 0.001, 4.72270651091},
    {4, 2, 0.01, 0},
    {4, 3, 0.001, 0},
    {4, 3, 0.01, 0},
    {4, 4, 0.001, 0},
    {4, 4, 0.01, 0},
    {4, 5, 0.001, 0},
    {4, 5, 0.01, 0},
    {4, 6, 0.001, 0},
    {4, 6, 0.01, 0},
    {4, 7, 0.001, 0},
    {4, 7, 0.01, 0},
    {4, 8, 0.001, 0},
    {4, 8, 0.01, 0},
    {4, 9, 0.001, 0},
    {4, 9, 0.01, 0},
    {4, 10, 0.001, 0},
    {4, 10, 0.01, 0},
    {4, 11, 0.001, 0},
    {4, 11, 0.01, 0},
    {4, 12, 0.001, 0},
    {4, 12, 0.01, 0},
    {5, -6, 0.001, 7.19778322195e-07},
    {5, -6, 0.01, 5.74295381252e-07},
    {5, -5, 0.001, 7.95636470603e-06},
    {5, -5, 0.01, 6.26589385778e-06},
    {5, -4, 0.001, 7.81110247305e-05},
    {5, -4, 0.01, 6.21785282697e-05},
    {5, -3, 0.001, 0.000715559413666},
    {5, -3, 0.01, 0.000560159887875},
    {5, -2, 0.001, 0.0076316059165},
    {5, -2, 0.01, 0.00596726239472},
    {5, -1, 0.001, 0.0741382060899},
    {5, -1, 0.01, 0.0584349690262},
    {5, 0, 0.001, 0.7418679142},
    {5, 0, 0.01, 0.615905310937},
    {5, 1, 0.001, 6.52688509772},
    {5, 1, 0.01, 4.80135029249},
    {5, 2, 0.001, 0},
    {5, 2, 0.01, 0},
    {5, 3, 0.001, 0},
    {5, 3, 0.01, 0},
    {5, 4, 0.001, 0},
    {5, 4, 0.01, 0},
    {5, 5, 0.001, 0},
    {5, 5, 0.01, 0},
    {5, 6, 0.001, 0},
    {5, 6, 0.01, 0},
    {5, 7, 0.001, 0},
    {5, 7, 0.01, 0},
    {5, 8, 0.001, 0},
    {5, 8, 0.01, 0},
    {5, 9, 0.001, 0},
    {5, 9, 0.01, 0},
    {5, 10, 0.001, 0},
    {5, 10, 0.01, 0},
    {5, 11, 0.001, 0},
    {5, 11, 0.01, 0},
    {5, 12, 0.001, 0},
    {5, 12, 0.01, 0},
    {6, -6, 0.001, 7.14003044417e-07},
    {6, -6, 0.01, 5.72428524736e-07},
    {6, -5, 0.001, 7.71418346887e-06},
    {6, -5, 0.01, 6.10958629526e-06},
    {6, -4, 0.001, 7.16645956711e-05},
    {6, -4, 0.01, 5.71129573798e-05},
    {6, -3, 0.001, 0.000714786765474},
    {6, -3, 0.01, 0.000569117344656},
    {6, -2, 0.001, 0.0069240931735},
    {6, -2, 0.01, 0.00549297535073},
    {6, -1, 0.001, 0.0749216838331},
    {6, -1, 0.01, 0.0577598881},
    {6, 0, 0.001, 0.776381572635},
    {6, 0, 0.01, 0.617388780546},
    {6, 1, 0.001, 6.24229672169},
    {6, 1, 0.01, 4.80885927591},
    {6, 2, 0.001, 0},
    {6, 2, 0.01, 0},
    {6, 3, 0.001, 0},
    {6, 3, 0.01, 0},
    {6, 4, 0.001, 0},
    {6, 4, 0.01, 0},
    {6, 5, 0.001, 0},
    {6, 5, 0.01, 0},
    {6, 6, 0.001, 0},
    {6, 6, 0.01, 0},
    {6, 7, 0.001, 0},
    {6, 7, 0.01, 0},
    {6, 8, 0.001, 0},
    {6, 8, 0.01, 0},
    {6, 9, 0.001, 0},
    {6, 9, 0.01, 0},
    {6, 10, 0.001, 0},
    {6, 10, 0.01, 0},
    {6, 11, 0.001, 0},
    {6, 11, 0.01, 0},
    {6, 12, 0.001, 0},
    {6, 12, 0.01, 0},
    {7, -6, 0.001, 7.58054555412e-07},
    {7, -6, 0.01, 5.8542278815e-07},
    {7, -5, 0.001, 7.21937014494e-06},
    {7, -5, 0.01, 5.68105023869e-06},
    {7, -4, 0.001, 7.56517532027e-05},
    {7, -4, 0.01, 5.99561660652e-05},
    {7, -3, 0.001, 0.000753793587316},
    {7, -3, 0.01, 0.000572690345271},
    {7, -2, 0.001, 0.00699855798795},
    {7, -2, 0.01, 0.00557483592839},
    {7, -1, 0.001, 0.0695032395496},
    {7, -1, 0.01, 0.0549719765389},
    {7, 0, 0.001, 0.749898700138},
    {7, 0, 0.01, 0.591898143127},
    {7, 1, 0.001, 6.58024157177},
    {7, 1, 0.01, 5.01920456394},
    {7, 2, 0.001, 1.4299488762},
    {7, 2, 0.01, 0},
    {7, 3, 0.001, 0},
    {7, 3, 0.01, 0},
    {7, 4, 0.001, 0},
    {7, 4, 0.01, 0},
    {7, 5, 0.001, 0},
    {7, 5, 0.01, 0},
    {7, 6, 0.001, 0},
    {7, 6, 0.01, 0},
    {7, 7, 0.001, 0},
    {7, 7, 0.01, 0},
    {7, 8, 0.001, 0},
    {7, 8, 0.01, 0},
    {7, 9, 0.001, 0},
    {7, 9, 0.01, 0},
    {7, 10, 0.001, 0},
    {7, 10, 0.01, 0},
    {7, 11, 0.001, 0},
    {7, 11, 0.01, 0},
    {7, 12, 0.001, 0},
    {7, 12, 0.01, 0},
    {8, -6, 0.001, 7.31851229663e-07},
    {8, -6, 0.01, 5.77586112587e-07},
    {8, -5, 0.001, 7.08646896304e-06},
    {8, -5, 0.01, 5.51243069027e-06},
    {8, -4, 0.001, 7.69271382474e-05},
    {8, -4, 0.01, 5.88783949495e-05},
    {8, -3, 0.001, 0.000685783788783},
    {8, -3, 0.01, 0.000525319942712},
    {8, -2, 0.001, 0.00695192094724},
    {8, -2, 0.01, 0.00545069168351},
    {8, -1, 0.001, 0.0748738370804},
    {8, -1, 0.01, 0.0582373326179},
    {8, 0, 0.001, 0.714725632435},
    {8, 0, 0.01, 0.558550064725},
    {8, 1, 0.001, 6.58010510829},
    {8, 1, 0.01, 4.9821725298},
    {8, 2, 0.001, 0.489096308638},
    {8, 2, 0.01, 0},
    {8, 3, 0.001, 0},
    {8, 3, 0.01, 0},
    {8, 4, 0.001, 0},
    {8, 4, 0.01, 0},
    {8, 5, 0.001, 0},
    {8, 5, 0.01, 0},
    {8, 6, 0.001, 0},
    {8, 6, 0.01, 0},
    {8, 7, 0.001, 0},
    {8, 7, 0.01, 0},
    {8, 8, 0.001, 0},
    {8, 8, 0.01, 0},
    {8, 9, 0.001, 0},
    {8, 9, 0.01, 0},
    {8, 10, 0.001, 0},
    {8, 10, 0.01, 0},
    {8, 11, 0.001, 0},
    {8, 11, 0.01, 0},
    {8, 12, 0.001, 0},
    {8, 12, 0.01, 0},
    {9, -6, 0.001, 7.15124409871e-07},
    {9, -6, 0.01, 5.50741721819e-07},
    {9, -5, 0.001, 7.52071531042e-06},
    {9, -5, 0.01, 5.75889951314e-06},
    {9, -4, 0.001, 7.51990360249e-05},
    {9, -4, 0.01, 5.81609679097e-05},
    {9, -3, 0.001, 0.00074517196946},
    {9, -3, 0.01, 0.00056609006806},
    {9, -2, 0.001, 0.00726093131197},
    {9, -2, 0.01, 0.00561640267141},
    {9, -1, 0.001, 0.0738002399633},
    {9, -1, 0.01, 0.0572558755655},
    {9, 0, 0.001, 0.720473950312},
    {9, 0, 0.01, 0.563896376102},
    {9, 1, 0.001, 6.56569857409},
    {9, 1, 0.01, 4.98195587288},
    {9, 2, 0.001, 0},
    {9, 2, 0.01, 0},
    {9, 3, 0.001, 0},
    {9, 3, 0.01, 0},
    {9, 4, 0.001, 0},
    {9, 4, 0.01, 0},
    {9, 5, 0.001, 0},
    {9, 5, 0.01, 0},
    {9, 6, 0.001, 0},
    {9, 6, 0.01, 0},
    {9, 7, 0.001, 0},
    {9, 7, 0.01, 0},
    {9, 8, 0.001, 0},
    {9, 8, 0.01, 0},
    {9, 9, 0.001, 0},
    {9, 9, 0.01, 0},
    {9, 10, 0.001, 0},
    {9, 10, 0.01, 0},
    {9, 11, 0.001, 0},
    {9, 11, 0.01, 0},
    {9, 12, 0.001, 0},
    {9, 12, 0.01, 0},
    {10, -6, 0.001, 7.21130201192e-07},
    {10, -6, 0.01, 5.54457700602e-07},
    {10, -5, 0.001, 7.46813156414e-06},
    {10, -5, 0.01, 5.65010274643e-06},
    {10, -4, 0.001, 7.2790243948e-05},
    {10, -4, 0.01, 5.69457843058e-05},
    {10, -3, 0.001, 0.000700032893404},
    {10, -3, 0.01, 0.000555425542675},
    {10, -2, 0.001, 0.00750913930061},
    {10, -2, 0.01, 0.00569465715276},
    {10, -1, 0.001, 0.075911080077},
    {10, -1, 0.01, 0.0568572887516},
    {10, 0, 0.001, 0.744937173804},
    {10, 0, 0.01, 0.573403561591},
    {10, 1, 0.001, 6.60022681914},
    {10, 1, 0.01, 4.99702016681},
    {10, 2, 0.001, 0},
    {10, 2, 0.01, 0},
    {10, 3, 0.001, 0},
    {10, 3, 0.01, 0},
    {10, 4, 0.001, 0},
    {10, 4, 0.01, 0},
    {10, 5, 0.001, 0},
    {10, 5, 0.01, 0},
    {10, 6, 0.001, 0},
    {10, 6, 0.01, 0},
    {10, 7, 0.001, 0},
    {10, 7, 0.01, 0},
    {10, 8, 0.001, 0},
    {10, 8, 0.01, 0},
    {10, 9, 0.001, 0},
    {10, 9, 0.01, 0},
    {10, 10, 0.001, 0},
    {10, 10, 0.01, 0},
    {10, 11, 0.001, 0},
    {10, 11, 0.01, 0},
    {10, 12, 0.001, 0},
    {10, 12, 0.01, 0},
    {11, -6, 0.001, 7.39286999657e-07},
    {11, -6, 0.01, 5.63599875256e-07},
    {11, -5, 0.001, 7.2594450249e-06},
    {11, -5, 0.01, 5.49127104227e-06},
    {11, -4, 0.001, 7.22345720337e-05},
    {11, -4, 0.01, 5.4987025942e-05},
    {11, -3, 0.001, 0.000723398012156},
    {11, -3, 0.01, 0.000550018453466},
    {11, -2, 0.001, 0.00714547909364},
    {11, -2, 0.01, 0.00558080007297},
    {11, -1, 0.001, 0.0710826349702},
    {11, -1, 0.01, 0.0548762182974},
    {11, 0, 0.001, 0.711745215744},
    {11, 0, 0.01, 0.542202478635},
    {11, 1, 0.001, 6.88990191117},
    {11, 1, 0.01, 5.13123785856},
    {11, 2, 0.001, 0},
    {11, 2, 0.01, 0},
    {11, 3, 0.001, 0},
    {11, 3, 0.01, 0},
    {11, 4, 0.001, 0},
    {11, 4, 0.01, 0},
    {11, 5, 0.001, 0},
    {11, 5, 0.01, 0},
    {11, 6, 0.001, 0},
    {11, 6, 0.01, 0},
    {11, 7, 0.001, 0},
    {11, 7, 0.01, 0},
    {11, 8, 0.001, 0},
    {11, 8, 0.01, 0},
    {11, 9, 0.001, 0},
    {11, 9, 0.01, 0},
    {11, 10, 0.001, 0},
    {11, 10, 0.01, 0},
    {11, 11, 0.001, 0},
    {11, 11, 0.01, 0},
    {11, 12, 0.001, 0},
    {11, 12, 0.01, 0},
    {12, -6, 0.001, 7.13998781017e-07},
    {12, -6, 0.01, 5.53690532459e-07},
    {12, -5, 0.001, 7.1764977567e-06},
    {12, -5, 0.01, 5.43165871995e-06},
    {12, -4, 0.001, 7.32209665934e-05},
    {12, -4, 0.01, 5.58722395004e-05},
    {12, -3, 0.001, 0.00071963247003},
    {12, -3, 0.01, 0.000549679638999},
    {12, -2, 0.001, 0.00717405403792},
    {12, -2, 0.01, 0.0055465105606},
    {12, -1, 0.001, 0.0719794304762},
    {12, -1, 0.01, 0.0538595445019},
    {12, 0, 0.001, 0.726318100785},
    {12, 0, 0.01, 0.551479872089},
    {12, 1, 0.001, 7.13400964468},
    {12, 1, 0.01, 5.26290624318},
    {12, 2, 0.001, 0},
    {12, 2, 0.01, 0},
    {12, 3, 0.001, 0},
    {12, 3, 0.01, 0},
    {12, 4, 0.001, 0},
    {12, 4, 0.01, 0},
    {12, 5, 0.001, 0},
    {12, 5, 0.01, 0},
    {12, 6, 0.001, 0},
    {12, 6, 0.01, 0},
    {12, 7, 0.001, 0},
    {12, 7, 0.01, 0},
    {12, 8, 0.001, 0},
    {12, 8, 0.01, 0},
    {12, 9, 0.001, 0},
    {12, 9, 0.01, 0},
    {12, 10, 0.001, 0},
    {12, 10, 0.01, 0},
    {12, 11, 0.001, 0},
    {12, 11, 0.01, 0},
    {12, 12, 0.001, 0},
    {12, 12, 0.01, 0},
    {13, -6, 0.001, 7.14271302315e-07},
    {13, -6, 0.01, 5.42715752238e-07},
    {13, -5, 0.001, 7.23542887562e-06},
    {13, -5, 0.01, 5.43706769249e-06},
    {13, -4, 0.001, 7.49540662283e-05},
    {13, -4, 0.01, 5.61557022384e-05},
    {13, -3, 0.001, 0.000732296192603},
    {13, -3, 0.01, 0.000552242587255},
    {13, -2, 0.001, 0.00745898323439},
    {13, -2, 0.01, 0.00560392550036},
    {13, -1, 0.001, 0.0739437853733},
    {13, -1, 0.01, 0.0564475630651},
    {13, 0, 0.001, 0.753624369082},
    {13, 0, 0.01, 0.575445908587},
    {13, 1, 0.001, 6.95703876577},
    {13, 1, 0.01, 5.19491549714},
    {13, 2, 0.001, 0},
    {13, 2, 0.01, 0},
    {13, 3, 0.001, 0},
    {13, 3, 0.01, 0},
    {13, 4, 0.001, 0},
    {13, 4, 0.01, 0},
    {13, 5, 0.001, 0},
    {13, 5, 0.01, 0},
    {13, 6, 0.001, 0},
    {13, 6, 0.01, 0},
    {13, 7, 0.001, 0},
    {13, 7, 0.01, 0},
    {13, 8, 0.001, 0},
    {13, 8, 0.01, 0},
    {13, 9, 0.001, 0},
    {13, 9, 0.01, 0},
    {13, 10, 0.001, 0},
    {13, 10, 0.01, 0},
    {13, 11, 0.001, 0},
    {13, 11, 0.01, 0},
    {13, 12, 0.001, 0},
    {13, 12, 0.01, 0},
    {14, -6, 0.001, 7.29179693295e-07},
    {14, -6, 0.01, 5.485441617e-07},
    {14, -5, 0.001, 7.20944859478e-06},
    {14, -5, 0.01, 5.49520924484e-06},
    {14, -4, 0.001, 7.30560064062e-05},
    {14, -4, 0.01, 5.45241993806e-05},
    {14, -3, 0.001, 0.000706921430205},
    {14, -3, 0.01, 0.000543085617791},
    {14, -2, 0.001, 0.00725085853859},
    {14, -2, 0.01, 0.00554370387685},
    {14, -1, 0.001, 0.0710359753015},
    {14, -1, 0.01, 0.0537819356292},
    {14, 0, 0.001, 0.72856891127},
    {14, 0, 0.01, 0.554189558025},
    {14, 1, 0.001, 7.07108211479},
    {14, 1, 0.01, 5.26609553635},
    {14, 2, 0.001, 0},
    {14, 2, 0.01, 0},
    {14, 3, 0.001, 0},
    {14, 3, 0.01, 0},
    {14, 4, 0.001, 0},
    {14, 4, 0.01, 0},
    {14, 5, 0.001, 0},
    {14, 5, 0.01, 0},
    {14, 6, 0.001, 0},
    {14, 6, 0.01, 0},
    {14, 7, 0.001, 0},
    {14, 7, 0.01, 0},
    {14, 8, 0.001, 0},
    {14, 8, 0.01, 0},
    {14, 9, 0.001, 0},
    {14, 9, 0.01, 0},
    {14, 10, 0.001, 0},
    {14, 10, 0.01, 0},
    {14, 11, 0.001, 0},
    {14, 11, 0.01, 0},
    {14, 12, 0.001, 0},
    {14, 12, 0.01, 0},
    {15, -6, 0.001, 7.25215923897e-07},
    {15, -6, 0.01, 5.43774628599e-07},
    {15, -5, 0.001, 7.12797713544e-06},
    {15, -5, 0.01, 5.39268370653e-06},
    {15, -4, 0.001, 7.19758124482e-05},
    {15, -4, 0.01, 5.49124232655e-05},
    {15, -3, 0.001, 0.000735460203427},
    {15, -3, 0.01, 0.000555241243883},
    {15, -2, 0.001, 0.00730071606414},
    {15, -2, 0.01, 0.00551903419439},
    {15, -1, 0.001, 0.0736783132509},
    {15, -1, 0.01, 0.0550400004125},
    {15, 0, 0.001, 0.736560121477},
    {15, 0, 0.01, 0.551542687412},
    {15, 1, 0.001, 7.00407748183},
    {15, 1, 0.01, 5.19656868747},
    {15, 2, 0.001, 0},
    {15, 2, 0.01, 0},
    {15, 3, 0.001, 0},
    {15, 3, 0.01, 0},
    {15, 4, 0.001, 0},
    {15, 4, 0.01, 0},
    {15, 5, 0.001, 0},
    {15, 5, 0.01, 0},
    {15, 6, 0.001, 0},
    {15, 6, 0.01, 0},
    {15, 7, 0.001, 0},
    {15, 7, 0.01, 0},
    {15, 8, 0.001, 0},
    {15, 8, 0.01, 0},
    {15, 9, 0.001, 0},
    {15, 9, 0.01, 0},
    {15, 10, 0.001, 0},
    {15, 10, 0.01, 0},
    {15, 11, 0.001, 0},
    {15, 11, 0.01, 0},
    {15, 12, 0.001, 0},
    {15, 12, 0.01, 0},
    {16, -6, 0.001, 7.35744349413e-07},
    {16, -6, 0.01, 5.53114649859e-07},
    {16, -5, 0.001, 7.43159914375e-06},
    {16, -5, 0.01, 5.5382791372e-06},
    {16, -4, 0.001, 7.28659636158e-05},
    {16, -4, 0.01, 5.43383711892e-05},
    {16, -3, 0.001, 0.000723288450553},
    {16, -3, 0.01, 0.000532484076839},
    {16, -2, 0.001, 0.00744893146887},
    {16, -2, 0.01, 0.00552754001992},
    {16, -1, 0.001, 0.073876302743},
    {16, -1, 0.01, 0.0549806378149},
    {16, 0, 0.001, 0.71956948869},
    {16, 0, 0.01, 0.54341986456},
    {16, 1, 0.001, 7.09821206818},
    {16, 1, 0.01, 5.18420084594},
    {16, 2, 0.001, 0},
    {16, 2, 0.01, 0},
    {16, 3, 0.001, 0},
    {16, 3, 0.01, 0},
    {16, 4, 0.001, 0},
    {16, 4, 0.01, 0},
    {16, 5, 0.001, 0},
    {16, 5, 0.01, 0},
    {16, 6, 0.001, 0},
    {16, 6, 0.01, 0},
    {16, 7, 0.001, 0},
    {16, 7, 0.01, 0},
    {16, 8, 0.001, 0},
    {16, 8, 0.01, 0},
    {16, 9, 0.001, 0},
    {16, 9, 0.01, 0},
    {16, 10, 0.001, 0},
    {16, 10, 0.01, 0},
    {16, 11, 0.001, 0},
    {16, 11, 0.01, 0},
    {16, 12, 0.001, 0},
    {16, 12, 0.01, 0},
    {17, -6, 0.001, 7.48643612265e-07},
    {17, -6, 0.01, 5.55709135007e-07},
    {17, -5, 0.001, 7.32829881277e-06},
    {17, -5, 0.01, 5.5443810054e-06},
    {17, -4, 0.001, 7.35812931333e-05},
    {17, -4, 0.01, 5.49866517024e-05},
    {17, -3, 0.001, 0.000741257929808},
    {17, -3, 0.01, 0.000550035822936},
    {17, -2, 0.001, 0.00735226333408},
    {17, -2, 0.01, 0.00553322717227},
    {17, -1, 0.001, 0.0740452101419},
    {17, -1, 0.01, 0.0550986201302},
    {17, 0, 0.001, 0.725896714227},
    {17, 0, 0.01, 0.547119859955},
    {17, 1, 0.001, 7.09452598535},
    {17, 1, 0.01, 5.27695271415},
    {17, 2, 0.001, 0},
    {17, 2, 0.01, 0},
    {17, 3, 0.001, 0},
    {17, 3, 0.01, 0},
    {17, 4, 0.001, 0},
    {17, 4, 0.01, 0},
    {17, 5, 0.001, 0},
    {17, 5, 0.01, 0},
    {17, 6, 0.001, 0},
    {17, 6, 0.01, 0},
    {17, 7, 0.001, 0},
    {17, 7, 0.01, 0},
    {17, 8, 0.001, 0},
    {17, 8, 0.01, 0},
    {17, 9, 0.001, 0},
    {17, 9, 0.01, 0},
    {17, 10, 0.001, 0},
    {17, 10, 0.01, 0},
    {17, 11, 0.001, 0},
    {17, 11, 0.01, 0},
    {17, 12, 0.001, 0},
    {17, 12, 0.01, 0},
    {18, -6, 0.001, 7.21874292411e-07},
    {18, -6, 0.01, 5.41922446688e-07},
    {18, -5, 0.001, 7.47669062536e-06},
    {18, -5, 0.01, 5.54462613045e-06},
    {18, -4, 0.001, 7.33437007628e-05},
    {18, -4, 0.01, 5.48280982225e-05},
    {18, -3, 0.001, 0.000726354106312},
    {18, -3, 0.01, 0.000548288696297},
    {18, -2, 0.001, 0.00731533882199},
    {18, -2, 0.01, 0.00548926676847},
    {18, -1, 0.001, 0.0743648993033},
    {18, -1, 0.01, 0.0549927203666},
    {18, 0, 0.001, 0.725659817965},
    {18, 0, 0.01, 0.543342160924},
    {18, 1, 0.001, 7.21034445731},
    {18, 1, 0.01, 5.30292162241},
    {18, 2, 0.001, 0},
    {18, 2, 0.01, 0},
    {18, 3, 0.001, 0},
    {18, 3, 0.01, 0},
    {18, 4, 0.001, 0},
    {18, 4, 0.01, 0},
    {18, 5, 0.001, 0},
    {18, 5, 0.01, 0},
    {18, 6, 0.001, 0},
    {18, 6, 0.01, 0},
    {18, 7, 0.001, 0},
    {18, 7, 0.01, 0},
    {18, 8, 0.001, 0},
    {18, 8, 0.01, 0},
    {18, 9, 0.001, 0},
    {18, 9, 0.01, 0},
    {18, 10, 0.001, 0},
    {18, 10, 0.01, 0},
    {18, 11, 0.001, 0},
    {18, 11, 0.01, 0},
    {18, 12, 0.001, 0},
    {18, 12, 0.01, 0},
    {19, -6, 0.001, 7.42825004722e-07},
    {19, -6, 0.01, 5.50705838132e-07},
    {19, -5, 0.001, 7.34355013831e-06},
    {19, -5, 0.01, 5.4219488931e-06},
    {19, -4, 0.001, 7.39062667482e-05},
    {19, -4, 0.01, 5.48543159251e-05},
    {19, -3, 0.001, 0.000733759842649},
    {19, -3, 0.01, 0.000547772766419},
    {19, -2, 0.001, 0.00746244879075},
    {19, -2, 0.01, 0.00543964816734},
    {19, -1, 0.001, 0.0734313343506},
    {19, -1, 0.01, 0.0545182374626},
    {19, 0, 0.001, 0.746649464726},
    {19, 0, 0.01, 0.554978179461},
    {19, 1, 0.001, 7.20352580379},
    {19, 1, 0.01, 5.27291560405},
    {19, 2, 0.001, 0},
    {19, 2, 0.01, 0},
    {19, 3, 0.001, 0},
    {19, 3, 0.01, 0},
    {19, 4, 0.001, 0},
    {19, 4, 0.01, 0},
    {19, 5, 0.001, 0},
    {19, 5, 0.01, 0},
    {19, 6, 0.001, 0},
    {19, 6, 0.01, 0},
    {19, 7, 0.001, 0},
    {19, 7, 0.01, 0},
    {19, 8, 0.001, 0},
    {19, 8, 0.01, 0},
    {19, 9, 0.001, 0},
    {19, 9, 0.01, 0},
    {19, 10, 0.001, 0},
    {19, 10, 0.01, 0},
    {19, 11, 0.001, 0},
    {19, 11, 0.01, 0},
    {19, 12, 0.001, 0},
    {19, 12, 0.01, 0},
    {20, -6, 0.001, 7.40957129846e-07},
    {20, -6, 0.01, 5.40403349219e-07},
    {20, -5, 0.001, 7.54278822913e-06},
    {20, -5, 0.01, 5.41431408908e-06},
    {20, -4, 0.001, 7.41034365937e-05},
    {20, -4, 0.01, 5.47946556824e-05},
    {20, -3, 0.001, 0.000735320803456},
    {20, -3, 0.01, 0.00054125189826},
    {20, -2, 0.001, 0.00739532479184},
    {20, -2, 0.01, 0.00536109928017},
    {20, -1, 0.001, 0.0756241934992},
    {20, -1, 0.01, 0.0551739607782},
    {20, 0, 0.001, 0.71276829124},
    {20, 0, 0.01, 0.536857650242},
    {20, 1, 0.001, 7.33393981548},
    {20, 1, 0.01, 5.26443229285},
    {20, 2, 0.001, 0},
    {20, 2, 0.01, 0},
    {20, 3, 0.001, 0},
    {20, 3, 0.01, 0},
    {20, 4, 0.001, 0},
    {20, 4, 0.01, 0},
    {20, 5, 0.001, 0},
    {20, 5, 0.01, 0},
    {20, 6, 0.001, 0},
    {20, 6, 0.01, 0},
    {20, 7, 0.001, 0},
    {20, 7, 0.01, 0},
    {20, 8, 0.001, 0},
    {20, 8, 0.01, 0},
    {20, 9, 0.001, 0},
    {20, 9, 0.01, 0},
    {20, 10, 0.001, 0},
    {20, 10, 0.01, 0},
    {20, 11, 0.001, 0},
    {20, 11, 0.01, 0},
    {20, 12, 0.001, 0},
    {20, 12, 0.01, 0},
    {21, -6, 0.001, 7.4358942547e-07},
    {21, -6, 0.01, 5.46112557766e-07},
    {21, -5, 0.001, 7.44198352967e-06},
    {21, -5, 0.01, 5.4489268199e-06},
    {21, -4, 0.001, 7.4433185451e-05},
    {21, -4, 0.01, 5.47164196737e-05},
    {21, -3, 0.001, 0.000750171312597},
    {21, -3, 0.01, 0.000547367722684},
    {21, -2, 0.001, 0.00740824623444},
    {21, -2, 0.01, 0.00548121128917},
    {21, -1, 0.001, 0.074726967339},
    {21, -1, 0.01, 0.0549665287523},
    {21, 0, 0.001, 0.75993887233},
    {21, 0, 0.01, 0.549834772772},
    {21, 1, 0.001, 7.43644248657},
    {21, 1, 0.01, 5.32624396001},
    {21, 2, 0.001, 0},
    {21, 2, 0.01, 0},
    {21, 3, 0.001, 0},
    {21, 3, 0.01, 0},
    {21, 4, 0.001, 0},
    {21, 4, 0.01, 0},
    {21, 5, 0.001, 0},
    {21, 5, 0.01, 0},
    {21, 6, 0.001, 0},
    {21, 6, 0.01, 0},
    {21, 7, 0.001, 0},
    {21, 7, 0.01, 0},
    {21, 8, 0.001, 0},
    {21, 8, 0.01, 0},
    {21, 9, 0.001, 0},
    {21, 9, 0.01, 0},
    {21, 10, 0.001, 0},
    {21, 10, 0.01, 0},
    {21, 11, 0.001, 0},
    {21, 11, 0.01, 0},
    {21, 12, 0.001, 0},
    {21, 12, 0.01, 0},
    {22, -6, 0.001, 7.24963250111e-07},
    {22, -6, 0.01, 5.36822618707e-07},
    {22, -5, 0.001, 7.33704128351e-06},
    {22, -5, 0.01, 5.41065754782e-06},
    {22, -4, 0.001, 7.66176796998e-05},
    {22, -4, 0.01, 5.42731563866e-05},
    {22, -3, 0.001, 0.000756665151903},
    {22, -3, 0.01, 0.000551218487617},
    {22, -2, 0.001, 0.00736335691731},
    {22, -2, 0.01, 0.00536693532625},
    {22, -1, 0.001, 0.0732296148462},
    {22, -1, 0.01, 0.0546188885292},
    {22, 0, 0.001, 0.724767016081},
    {22, 0, 0.01, 0.540866569066},
    {22, 1, 0.001, 7.20372340945},
    {22, 1, 0.01, 5.26633791843},
    {22, 2, 0.001, 0},
    {22, 2, 0.01, 0},
    {22, 3, 0.001, 0},
    {22, 3, 0.01, 0},
    {22, 4, 0.001, 0},
    {22, 4, 0.01, 0},
    {22, 5, 0.001, 0},
    {22, 5, 0.01, 0},
    {22, 6, 0.001, 0},
    {22, 6, 0.01, 0},
    {22, 7, 0.001, 0},
    {22, 7, 0.01, 0},
    {22, 8, 0.001, 0},
    {22, 8, 0.01, 0},
    {22, 9, 0.001, 0},
    {22, 9, 0.01, 0},
    {22, 10, 0.001, 0},
    {22, 10, 0.01, 0},
    {22, 11, 0.001, 0},
    {22, 11, 0.01, 0},
    {22, 12, 0.001, 0},
    {22, 12, 0.01, 0},
    {23, -6, 0.001, 7.34285531082e-07},
    {23, -6, 0.01, 5.3610255927e-07},
    {23, -5, 0.001, 7.36593885308e-06},
    {23, -5, 0.01, 5.44382243218e-06},
    {23, -4, 0.001, 7.40671257843e-05},
    {23, -4, 0.01, 5.39858338261e-05},
    {23, -3, 0.001, 0.000757288182613},
    {23, -3, 0.01, 0.000542809428421},
    {23, -2, 0.001, 0.00735618258738},
    {23, -2, 0.01, 0.00533035983343},
    {23, -1, 0.001, 0.0744754516712},
    {23, -1, 0.01, 0.0544064133338},
    {23, 0, 0.001, 0.740014887564},
    {23, 0, 0.01, 0.54064347555},
    {23, 1, 0.001, 7.13514825193},
    {23, 1, 0.01, 5.24652402695},
    {23, 2, 0.001, 0},
    {23, 2, 0.01, 0},
    {23, 3, 0.001, 0},
    {23, 3, 0.01, 0},
    {23, 4, 0.001, 0},
    {23, 4, 0.01, 0},
    {23, 5, 0.001, 0},
    {23, 5, 0.01, 0},
    {23, 6, 0.001, 0},
    {23, 6, 0.01, 0},
    {23, 7, 0.001, 0},
    {23, 7, 0.01, 0},
    {23, 8, 0.001, 0},
    {23, 8, 0.01, 0},
    {23, 9, 0.001, 0},
    {23, 9, 0.01, 0},
    {23, 10, 0.001, 0},
    {23, 10, 0.01, 0},
    {23, 11, 0.001, 0},
    {23, 11, 0.01, 0},
    {23, 12, 0.001, 0},
    {23, 12, 0.01, 0},
    {24, -6, 0.001, 7.37652014022e-07},
    {24, -6, 0.01, 5.39754363031e-07},
    {24, -5, 0.001, 7.41883982486e-06},
    {24, -5, 0.01, 5.40912007532e-06},
    {24, -4, 0.001, 7.51168006448e-05},
    {24, -4, 0.01, 5.39447438771e-05},
    {24, -3, 0.001, 0.000727637708938},
    {24, -3, 0.01, 0.00053500172954},
    {24, -2, 0.001, 0.00747814157673},
    {24, -2, 0.01, 0.00546141205161},
    {24, -1, 0.001, 0.0739508003044},
    {24, -1, 0.01, 0.0544593393006},
    {24, 0, 0.001, 0.739598725192},
    {24, 0, 0.01, 0.540732996363},
    {24, 1, 0.001, 7.37324732413},
    {24, 1, 0.01, 5.33821791652},
    {24, 2, 0.001, 0},
    {24, 2, 0.01, 0},
    {24, 3, 0.001, 0},
    {24, 3, 0.01, 0},
    {24, 4, 0.001, 0},
    {24, 4, 0.01, 0},
    {24, 5, 0.001, 0},
    {24, 5, 0.01, 0},
    {24, 6, 0.001, 0},
    {24, 6, 0.01, 0},
    {24, 7, 0.001, 0},
    {24, 7, 0.01, 0},
    {24, 8, 0.001, 0},
    {24, 8, 0.01, 0},
    {24, 9, 0.001, 0},
    {24, 9, 0.01, 0},
    {24, 10, 0.001, 0},
    {24, 10, 0.01, 0},
    {24, 11, 0.001, 0},
    {24, 11, 0.01, 0},
    {24, 12, 0.001, 0},
    {24, 12, 0.01, 0},
};

}  // namespace tcnav::detail
