// Tracy-Widom beta=1 quantile table, version 1.
// Generated from data/tracy_widom_beta1.csv (Fredholm-determinant
// evaluation of the GOE largest-eigenvalue law; see that file and
// README for provenance). Column 1: probability p, column 2: quantile t
// with P(TW1 <= t) = p.
#include "rmt/tracy_widom.hpp"

namespace rmt::detail {

const int kTw1TableSize = 999;

const double kTw1P[] = {
    0.001, 0.002, 0.003, 0.004, 0.005, 0.006,
    0.007, 0.008, 0.009, 0.010, 0.011, 0.012,
    0.013, 0.014, 0.015, 0.016, 0.017, 0.018,
    0.019, 0.020, 0.021, 0.022, 0.023, 0.024,
    0.025, 0.026, 0.027, 0.028, 0.029, 0.030,
    0.031, 0.032, 0.033, 0.034, 0.035, 0.036,
    0.037, 0.038, 0.039, 0.040, 0.041, 0.042,
    0.043, 0.044, 0.045, 0.046, 0.047, 0.048,
    0.049, 0.050, 0.051, 0.052, 0.053, 0.054,
    0.055, 0.056, 0.057, 0.058, 0.059, 0.060,
    0.061, 0.062, 0.063, 0.064, 0.065, 0.066,
    0.067, 0.068, 0.069, 0.070, 0.071, 0.072,
    0.073, 0.074, 0.075, 0.076, 0.077, 0.078,
    0.079, 0.080, 0.081, 0.082, 0.083, 0.084,
    0.085, 0.086, 0.087, 0.088, 0.089, 0.090,
    0.091, 0.092, 0.093, 0.094, 0.095, 0.096,
    0.097, 0.098, 0.099, 0.100, 0.101, 0.102,
    0.103, 0.104, 0.105, 0.106, 0.107, 0.108,
    0.109, 0.110, 0.111, 0.112, 0.113, 0.114,
    0.115, 0.116, 0.117, 0.118, 0.119, 0.120,
    0.121, 0.122, 0.123, 0.124, 0.125, 0.126,
    0.127, 0.128, 0.129, 0.130, 0.131, 0.132,
    0.133, 0.134, 0.135, 0.136, 0.137, 0.138,
    0.139, 0.140, 0.141, 0.142, 0.143, 0.144,
    0.145, 0.146, 0.147, 0.148, 0.149, 0.150,
    0.151, 0.152, 0.153, 0.154, 0.155, 0.156,
    0.157, 0.158, 0.159, 0.160, 0.161, 0.162,
    0.163, 0.164, 0.165, 0.166, 0.167, 0.168,
    0.169, 0.170, 0.171, 0.172, 0.173, 0.174,
    0.175, 0.176, 0.177, 0.178, 0.179, 0.180,
    0.181, 0.182, 0.183, 0.184, 0.185, 0.186,
    0.187, 0.188, 0.189, 0.190, 0.191, 0.192,
    0.193, 0.194, 0.195, 0.196, 0.197, 0.198,
    0.199, 0.200, 0.201, 0.202, 0.203, 0.204,
    0.205, 0.206, 0.207, 0.208, 0.209, 0.210,
    0.211, 0.212, 0.213, 0.214, 0.215, 0.216,
    0.217, 0.218, 0.219, 0.220, 0.221, 0.222,
    0.223, 0.224, 0.225, 0.226, 0.227, 0.228,
    0.229, 0.230, 0.231, 0.232, 0.233, 0.234,
    0.235, 0.236, 0.237, 0.238, 0.239, 0.240,
    0.241, 0.242, 0.243, 0.244, 0.245, 0.246,
    0.247, 0.248, 0.249, 0.250, 0.251, 0.252,
    0.253, 0.254, 0.255, 0.256, 0.257, 0.258,
    0.259, 0.260, 0.261, 0.262, 0.263, 0.264,
    0.265, 0.266, 0.267, 0.268, 0.269, 0.270,
    0.271, 0.272, 0.273, 0.274, 0.275, 0.276,
    0.277, 0.278, 0.279, 0.280, 0.281, 0.282,
    0.283, 0.284, 0.285, 0.286, 0.287, 0.288,
    0.289, 0.290, 0.291, 0.292, 0.293, 0.294,
    0.295, 0.296, 0.297, 0.298, 0.299, 0.300,
    0.301, 0.302, 0.303, 0.304, 0.305, 0.306,
    0.307, 0.308, 0.309, 0.310, 0.311, 0.312,
    0.313, 0.314, 0.315, 0.316, 0.317, 0.318,
    0.319, 0.320, 0.321, 0.322, 0.323, 0.324,
    0.325, 0.326, 0.327, 0.328, 0.329, 0.330,
    0.331, 0.332, 0.333, 0.334, 0.335, 0.336,
    0.337, 0.338, 0.339, 0.340, 0.341, 0.342,
    0.343, 0.344, 0.345, 0.346, 0.347, 0.348,
    0.349, 0.350, 0.351, 0.352, 0.353, 0.354,
    0.355, 0.356, 0.357, 0.358, 0.359, 0.360,
    0.361, 0.362, 0.363, 0.364, 0.365, 0.366,
    0.367, 0.368, 0.369, 0.370, 0.371, 0.372,
    0.373, 0.374, 0.375, 0.376, 0.377, 0.378,
    0.379, 0.380, 0.381, 0.382, 0.383, 0.384,
    0.385, 0.386, 0.387, 0.388, 0.389, 0.390,
    0.391, 0.392, 0.393, 0.394, 0.395, 0.396,
    0.397, 0.398, 0.399, 0.400, 0.401, 0.402,
    0.403, 0.404, 0.405, 0.406, 0.407, 0.408,
    0.409, 0.410, 0.411, 0.412, 0.413, 0.414,
    0.415, 0.416, 0.417, 0.418, 0.419, 0.420,
    0.421, 0.422, 0.423, 0.424, 0.425, 0.426,
    0.427, 0.428, 0.429, 0.430, 0.431, 0.432,
    0.433, 0.434, 0.435, 0.436, 0.437, 0.438,
    0.439, 0.440, 0.441, 0.442, 0.443, 0.444,
    0.445, 0.446, 0.447, 0.448, 0.449, 0.450,
    0.451, 0.452, 0.453, 0.454, 0.455, 0.456,
    0.457, 0.458, 0.459, 0.460, 0.461, 0.462,
    0.463, 0.464, 0.465, 0.466, 0.467, 0.468,
    0.469, 0.470, 0.471, 0.472, 0.473, 0.474,
    0.475, 0.476, 0.477, 0.478, 0.479, 0.480,
    0.481, 0.482, 0.483, 0.484, 0.485, 0.486,
    0.487, 0.488, 0.489, 0.490, 0.491, 0.492,
    0.493, 0.494, 0.495, 0.496, 0.497, 0.498,
    0.499, 0.500, 0.501, 0.502, 0.503, 0.504,
    0.505, 0.506, 0.507, 0.508, 0.509, 0.510,
    0.511, 0.512, 0.513, 0.514, 0.515, 0.516,
    0.517, 0.518, 0.519, 0.520, 0.521, 0.522,
    0.523, 0.524, 0.525, 0.526, 0.527, 0.528,
    0.529, 0.530, 0.531, 0.532, 0.533, 0.534,
    0.535, 0.536, 0.537, 0.538, 0.539, 0.540,
    0.541, 0.542, 0.543, 0.544, 0.545, 0.546,
    0.547, 0.548, 0.549, 0.550, 0.551, 0.552,
    0.553, 0.554, 0.555, 0.556, 0.557, 0.558,
    0.559, 0.560, 0.561, 0.562, 0.563, 0.564,
    0.565, 0.566, 0.567, 0.568, 0.569, 0.570,
    0.571, 0.572, 0.573, 0.574, 0.575, 0.576,
    0.577, 0.578, 0.579, 0.580, 0.581, 0.582,
    0.583, 0.584, 0.585, 0.586, 0.587, 0.588,
    0.589, 0.590, 0.591, 0.592, 0.593, 0.594,
    0.595, 0.596, 0.597, 0.598, 0.599, 0.600,
    0.601, 0.602, 0.603, 0.604, 0.605, 0.606,
    0.607, 0.608, 0.609, 0.610, 0.611, 0.612,
    0.613, 0.614, 0.615, 0.616, 0.617, 0.618,
    0.619, 0.620, 0.621, 0.622, 0.623, 0.624,
    0.625, 0.626, 0.627, 0.628, 0.629, 0.630,
    0.631, 0.632, 0.633, 0.634, 0.635, 0.636,
    0.637, 0.638, 0.639, 0.640, 0.641, 0.642,
    0.643, 0.644, 0.645, 0.646, 0.647, 0.648,
    0.649, 0.650, 0.651, 0.652, 0.653, 0.654,
    0.655, 0.656, 0.657, 0.658, 0.659, 0.660,
    0.661, 0.662, 0.663, 0.664, 0.665, 0.666,
    0.667, 0.668, 0.669, 0.670, 0.671, 0.672,
    0.673, 0.674, 0.675, 0.676, 0.677, 0.678,
    0.679, 0.680, 0.681, 0.682, 0.683, 0.684,
    0.685, 0.686, 0.687, 0.688, 0.689, 0.690,
    0.691, 0.692, 0.693, 0.694, 0.695, 0.696,
    0.697, 0.698, 0.699, 0.700, 0.701, 0.702,
    0.703, 0.704, 0.705, 0.706, 0.707, 0.708,
    0.709, 0.710, 0.711, 0.712, 0.713, 0.714,
    0.715, 0.716, 0.717, 0.718, 0.719, 0.720,
    0.721, 0.722, 0.723, 0.724, 0.725, 0.726,
    0.727, 0.728, 0.729, 0.730, 0.731, 0.732,
    0.733, 0.734, 0.735, 0.736, 0.737, 0.738,
    0.739, 0.740, 0.741, 0.742, 0.743, 0.744,
    0.745, 0.746, 0.747, 0.748, 0.749, 0.750,
    0.751, 0.752, 0.753, 0.754, 0.755, 0.756,
    0.757, 0.758, 0.759, 0.760, 0.761, 0.762,
    0.763, 0.764, 0.765, 0.766, 0.767, 0.768,
    0.769, 0.770, 0.771, 0.772, 0.773, 0.774,
    0.775, 0.776, 0.777, 0.778, 0.779, 0.780,
    0.781, 0.782, 0.783, 0.784, 0.785, 0.786,
    0.787, 0.788, 0.789, 0.790, 0.791, 0.792,
    0.793, 0.794, 0.795, 0.796, 0.797, 0.798,
    0.799, 0.800, 0.801, 0.802, 0.803, 0.804,
    0.805, 0.806, 0.807, 0.808, 0.809, 0.810,
    0.811, 0.812, 0.813, 0.814, 0.815, 0.816,
    0.817, 0.818, 0.819, 0.820, 0.821, 0.822,
    0.823, 0.824, 0.825, 0.826, 0.827, 0.828,
    0.829, 0.830, 0.831, 0.832, 0.833, 0.834,
    0.835, 0.836, 0.837, 0.838, 0.839, 0.840,
    0.841, 0.842, 0.843, 0.844, 0.845, 0.846,
    0.847, 0.848, 0.849, 0.850, 0.851, 0.852,
    0.853, 0.854, 0.855, 0.856, 0.857, 0.858,
    0.859, 0.860, 0.861, 0.862, 0.863, 0.864,
    0.865, 0.866, 0.867, 0.868, 0.869, 0.870,
    0.871, 0.872, 0.873, 0.874, 0.875, 0.876,
    0.877, 0.878, 0.879, 0.880, 0.881, 0.882,
    0.883, 0.884, 0.885, 0.886, 0.887, 0.888,
    0.889, 0.890, 0.891, 0.892, 0.893, 0.894,
    0.895, 0.896, 0.897, 0.898, 0.899, 0.900,
    0.901, 0.902, 0.903, 0.904, 0.905, 0.906,
    0.907, 0.908, 0.909, 0.910, 0.911, 0.912,
    0.913, 0.914, 0.915, 0.916, 0.917, 0.918,
    0.919, 0.920, 0.921, 0.922, 0.923, 0.924,
    0.925, 0.926, 0.927, 0.928, 0.929, 0.930,
    0.931, 0.932, 0.933, 0.934, 0.935, 0.936,
    0.937, 0.938, 0.939, 0.940, 0.941, 0.942,
    0.943, 0.944, 0.945, 0.946, 0.947, 0.948,
    0.949, 0.950, 0.951, 0.952, 0.953, 0.954,
    0.955, 0.956, 0.957, 0.958, 0.959, 0.960,
    0.961, 0.962, 0.963, 0.964, 0.965, 0.966,
    0.967, 0.968, 0.969, 0.970, 0.971, 0.972,
    0.973, 0.974, 0.975, 0.976, 0.977, 0.978,
    0.979, 0.980, 0.981, 0.982, 0.983, 0.984,
    0.985, 0.986, 0.987, 0.988, 0.989, 0.990,
    0.991, 0.992, 0.993, 0.994, 0.995, 0.996,
    0.997, 0.998, 0.999,
};

const double kTw1T[] = {
    -4.65419865, -4.44768336, -4.31918934, -4.22409688, -4.14787636, -4.08388038,
    -4.02848911, -3.97950339, -3.93548341, -3.89543283, -3.85863268, -3.82454614,
    -3.79276220, -3.76295703, -3.73487328, -3.70830028, -3.68306565, -3.65902517,
    -3.63605689, -3.61405722, -3.59293726, -3.57262003, -3.55303843, -3.53413360,
    -3.51585363, -3.49815246, -3.48098905, -3.46432679, -3.44813271, -3.43237701,
    -3.41703268, -3.40207517, -3.38748233, -3.37323377, -3.35931064, -3.34569582,
    -3.33237362, -3.31932927, -3.30654929, -3.29402126, -3.28173338, -3.26967492,
    -3.25783578, -3.24620644, -3.23477819, -3.22354265, -3.21249217, -3.20161938,
    -3.19091748, -3.18037998, -3.17000078, -3.15977417, -3.14969467, -3.13975717,
    -3.12995676, -3.12028885, -3.11074902, -3.10133314, -3.09203720, -3.08285747,
    -3.07379031, -3.06483234, -3.05598023, -3.04723093, -3.03858139, -3.03002879,
    -3.02157041, -3.01320357, -3.00492587, -2.99673478, -2.98862812, -2.98060361,
    -2.97265910, -2.96479263, -2.95700212, -2.94928581, -2.94164181, -2.93406831,
    -2.92656377, -2.91912641, -2.91175475, -2.90444729, -2.89720245, -2.89001896,
    -2.88289540, -2.87583036, -2.86882274, -2.86187119, -2.85497446, -2.84813158,
    -2.84134129, -2.83460246, -2.82791423, -2.82127542, -2.81468502, -2.80814225,
    -2.80164602, -2.79519540, -2.78878971, -2.78242794, -2.77610919, -2.76983289,
    -2.76359812, -2.75740401, -2.75125003, -2.74513541, -2.73905929, -2.73302113,
    -2.72702033, -2.72105608, -2.71512775, -2.70923492, -2.70337686, -2.69755285,
    -2.69176257, -2.68600541, -2.68028067, -2.67458790, -2.66892672, -2.66329650,
    -2.65769663, -2.65212687, -2.64658669, -2.64107551, -2.63559288, -2.63013857,
    -2.62471202, -2.61931268, -2.61394031, -2.60859457, -2.60327494, -2.59798092,
    -2.59271238, -2.58746892, -2.58225006, -2.57705537, -2.57188476, -2.56673782,
    -2.56161409, -2.55651322, -2.55143513, -2.54637940, -2.54134562, -2.53633348,
    -2.53134290, -2.52637351, -2.52142490, -2.51649679, -2.51158912, -2.50670155,
    -2.50183368, -2.49698525, -2.49215622, -2.48734627, -2.48255506, -2.47778227,
    -2.47302791, -2.46829171, -2.46357334, -2.45887246, -2.45418908, -2.44952301,
    -2.44487392, -2.44024150, -2.43562565, -2.43102632, -2.42644320, -2.42187600,
    -2.41732450, -2.41278875, -2.40826850, -2.40376346, -2.39927337, -2.39479823,
    -2.39033793, -2.38589220, -2.38146078, -2.37704349, -2.37264040, -2.36825128,
    -2.36387588, -2.35951394, -2.35516548, -2.35083044, -2.34650856, -2.34219961,
    -2.33790341, -2.33362003, -2.32934932, -2.32509104, -2.32084497, -2.31661101,
    -2.31238923, -2.30817942, -2.30398137, -2.29979485, -2.29561989, -2.29145646,
    -2.28730436, -2.28316339, -2.27903335, -2.27491433, -2.27080623, -2.26670888,
    -2.26262207, -2.25854564, -2.25447970, -2.25042412, -2.24637874, -2.24234337,
    -2.23831786, -2.23430232, -2.23029664, -2.22630064, -2.22231415, -2.21833703,
    -2.21436940, -2.21041114, -2.20646210, -2.20252210, -2.19859101, -2.19466893,
    -2.19075579, -2.18685142, -2.18295567, -2.17906838, -2.17518965, -2.17131945,
    -2.16745761, -2.16360398, -2.15975841, -2.15592096, -2.15209163, -2.14827030,
    -2.14445680, -2.14065099, -2.13685285, -2.13306247, -2.12927973, -2.12550447,
    -2.12173656, -2.11797590, -2.11422264, -2.11047668, -2.10673787, -2.10300609,
    -2.09928121, -2.09556332, -2.09185242, -2.08814837, -2.08445105, -2.08076032,
    -2.07707617, -2.07339870, -2.06972780, -2.06606334, -2.06240519, -2.05875326,
    -2.05510768, -2.05146839, -2.04783527, -2.04420822, -2.04058710, -2.03697192,
    -2.03336278, -2.02975956, -2.02616217, -2.02257046, -2.01898435, -2.01540397,
    -2.01182927, -2.00826016, -2.00469652, -2.00113824, -1.99758528, -1.99403779,
    -1.99049565, -1.98695878, -1.98342706, -1.97990038, -1.97637881, -1.97286240,
    -1.96935105, -1.96584465, -1.96234311, -1.95884632, -1.95535444, -1.95186742,
    -1.94838516, -1.94490758, -1.94143456, -1.93796606, -1.93450223, -1.93104298,
    -1.92758823, -1.92413788, -1.92069182, -1.91725007, -1.91381274, -1.91037974,
    -1.90695097, -1.90352635, -1.90010577, -1.89668929, -1.89327699, -1.88986877,
    -1.88646455, -1.88306422, -1.87966770, -1.87627509, -1.87288642, -1.86950159,
    -1.86612053, -1.86274314, -1.85936934, -1.85599924, -1.85263285, -1.84927010,
    -1.84591088, -1.84255512, -1.83920274, -1.83585386, -1.83250848, -1.82916652,
    -1.82582790, -1.82249252, -1.81916032, -1.81583142, -1.81250582, -1.80918344,
    -1.80586419, -1.80254800, -1.79923479, -1.79592469, -1.79261769, -1.78931371,
    -1.78601269, -1.78271453, -1.77941917, -1.77612671, -1.77283718, -1.76955049,
    -1.76626657, -1.76298534, -1.75970673, -1.75643082, -1.75315766, -1.74988717,
    -1.74661928, -1.74335391, -1.74009098, -1.73683056, -1.73357272, -1.73031738,
    -1.72706448, -1.72381394, -1.72056567, -1.71731972, -1.71407618, -1.71083498,
    -1.70759607, -1.70435935, -1.70112476, -1.69789228, -1.69466206, -1.69143403,
    -1.68820812, -1.68498426, -1.68176238, -1.67854244, -1.67532457, -1.67210875,
    -1.66889490, -1.66568296, -1.66247286, -1.65926453, -1.65605809, -1.65285355,
    -1.64965085, -1.64644992, -1.64325068, -1.64005307, -1.63685716, -1.63366301,
    -1.63047056, -1.62727974, -1.62409048, -1.62090272, -1.61771646, -1.61453182,
    -1.61134875, -1.60816717, -1.60498703, -1.60180826, -1.59863081, -1.59545483,
    -1.59228028, -1.58910710, -1.58593524, -1.58276461, -1.57959516, -1.57642699,
    -1.57326013, -1.57009452, -1.56693010, -1.56376680, -1.56060455, -1.55744338,
    -1.55428339, -1.55112454, -1.54796675, -1.54480996, -1.54165411, -1.53849916,
    -1.53534525, -1.53219235, -1.52904040, -1.52588933, -1.52273908, -1.51958959,
    -1.51644097, -1.51329323, -1.51014634, -1.50700021, -1.50385479, -1.50071001,
    -1.49756590, -1.49442256, -1.49127995, -1.48813799, -1.48499663, -1.48185580,
    -1.47871547, -1.47557577, -1.47243667, -1.46929812, -1.46616007, -1.46302243,
    -1.45988516, -1.45674834, -1.45361201, -1.45047613, -1.44734062, -1.44420543,
    -1.44107050, -1.43793582, -1.43480152, -1.43166755, -1.42853386, -1.42540037,
    -1.42226704, -1.41913381, -1.41600079, -1.41286801, -1.40973539, -1.40660287,
    -1.40347041, -1.40033792, -1.39720547, -1.39407313, -1.39094086, -1.38780858,
    -1.38467625, -1.38154380, -1.37841120, -1.37527859, -1.37214593, -1.36901318,
    -1.36588025, -1.36274711, -1.35961368, -1.35648007, -1.35334631, -1.35021234,
    -1.34707810, -1.34394354, -1.34080859, -1.33767327, -1.33453768, -1.33140178,
    -1.32826551, -1.32512881, -1.32199162, -1.31885389, -1.31571576, -1.31257721,
    -1.30943818, -1.30629862, -1.30315846, -1.30001765, -1.29687624, -1.29373432,
    -1.29059181, -1.28744866, -1.28430482, -1.28116021, -1.27801483, -1.27486881,
    -1.27172210, -1.26857465, -1.26542638, -1.26227725, -1.25912721, -1.25597636,
    -1.25282472, -1.24967223, -1.24651882, -1.24336444, -1.24020903, -1.23705263,
    -1.23389533, -1.23073707, -1.22757778, -1.22441741, -1.22125590, -1.21809324,
    -1.21492954, -1.21176476, -1.20859886, -1.20543176, -1.20226341, -1.19909376,
    -1.19592292, -1.19275090, -1.18957763, -1.18640306, -1.18322712, -1.18004976,
    -1.17687103, -1.17369100, -1.17050961, -1.16732681, -1.16414252, -1.16095669,
    -1.15776933, -1.15458053, -1.15139027, -1.14819846, -1.14500506, -1.14181000,
    -1.13861324, -1.13541491, -1.13221499, -1.12901341, -1.12581011, -1.12260504,
    -1.11939813, -1.11618948, -1.11297912, -1.10976697, -1.10655299, -1.10333711,
    -1.10011926, -1.09689950, -1.09367789, -1.09045439, -1.08722891, -1.08400141,
    -1.08077182, -1.07754014, -1.07430649, -1.07107080, -1.06783301, -1.06459307,
    -1.06135090, -1.05810649, -1.05485996, -1.05161125, -1.04836032, -1.04510709,
    -1.04185151, -1.03859353, -1.03533327, -1.03207070, -1.02880577, -1.02553840,
    -1.02226854, -1.01899612, -1.01572127, -1.01244397, -1.00916416, -1.00588177,
    -1.00259674, -0.99930901, -0.99601868, -0.99272575, -0.98943017, -0.98613186,
    -0.98283076, -0.97952680, -0.97622008, -0.97291062, -0.96959834, -0.96628318,
    -0.96296508, -0.95964397, -0.95631993, -0.95299298, -0.94966306, -0.94633011,
    -0.94299405, -0.93965482, -0.93631249, -0.93296710, -0.92961857, -0.92626684,
    -0.92291183, -0.91955349, -0.91619189, -0.91282705, -0.90945890, -0.90608738,
    -0.90271242, -0.89933394, -0.89595204, -0.89256673, -0.88917794, -0.88578559,
    -0.88238961, -0.87898994, -0.87558669, -0.87217984, -0.86876933, -0.86535506,
    -0.86193699, -0.85851505, -0.85508935, -0.85165986, -0.84822651, -0.84478922,
    -0.84134792, -0.83790258, -0.83445331, -0.83100004, -0.82754270, -0.82408123,
    -0.82061553, -0.81714563, -0.81367160, -0.81019336, -0.80671085, -0.80322398,
    -0.79973268, -0.79623702, -0.79273700, -0.78923257, -0.78572364, -0.78221012,
    -0.77869197, -0.77516928, -0.77164201, -0.76811009, -0.76457344, -0.76103198,
    -0.75748568, -0.75393465, -0.75037880, -0.74681805, -0.74325234, -0.73968156,
    -0.73610579, -0.73252503, -0.72893921, -0.72534825, -0.72175205, -0.71815057,
    -0.71454390, -0.71093199, -0.70731475, -0.70369209, -0.70006394, -0.69643031,
    -0.69279126, -0.68914668, -0.68549650, -0.68184062, -0.67817899, -0.67451170,
    -0.67083869, -0.66715987, -0.66347515, -0.65978445, -0.65608779, -0.65238521,
    -0.64867660, -0.64496188, -0.64124094, -0.63751377, -0.63378042, -0.63004083,
    -0.62629490, -0.62254252, -0.61878363, -0.61501829, -0.61124647, -0.60746807,
    -0.60368298, -0.59989112, -0.59609251, -0.59228716, -0.58847498, -0.58465586,
    -0.58082971, -0.57699649, -0.57315626, -0.56930894, -0.56545441, -0.56159257,
    -0.55772335, -0.55384684, -0.54996294, -0.54607156, -0.54217257, -0.53826590,
    -0.53435162, -0.53042967, -0.52649991, -0.52256226, -0.51861660, -0.51466302,
    -0.51070143, -0.50673174, -0.50275382, -0.49876756, -0.49477304, -0.49077020,
    -0.48675890, -0.48273903, -0.47871049, -0.47467334, -0.47062750, -0.46657286,
    -0.46250929, -0.45843669, -0.45435511, -0.45026448, -0.44616466, -0.44205553,
    -0.43793700, -0.43380911, -0.42967178, -0.42552485, -0.42136822, -0.41720178,
    -0.41302560, -0.40883955, -0.40464349, -0.40043728, -0.39622088, -0.39199431,
    -0.38775742, -0.38351006, -0.37925211, -0.37498357, -0.37070439, -0.36641441,
    -0.36211349, -0.35780152, -0.35347852, -0.34914437, -0.34479893, -0.34044203,
    -0.33607363, -0.33169371, -0.32730212, -0.32289869, -0.31848328, -0.31405590,
    -0.30961645, -0.30516476, -0.30070066, -0.29622407, -0.29173498, -0.28723322,
    -0.28271862, -0.27819101, -0.27365042, -0.26909670, -0.26452967, -0.25994916,
    -0.25535510, -0.25074744, -0.24612597, -0.24149053, -0.23684096, -0.23217726,
    -0.22749925, -0.22280672, -0.21809950, -0.21337757, -0.20864078, -0.20388890,
    -0.19912176, -0.19433929, -0.18954136, -0.18472776, -0.17989829, -0.17505283,
    -0.17019130, -0.16531346, -0.16041909, -0.15550807, -0.15058031, -0.14563557,
    -0.14067361, -0.13569430, -0.13069753, -0.12568307, -0.12065067, -0.11560017,
    -0.11053146, -0.10544429, -0.10033840, -0.09521364, -0.09006987, -0.08490681,
    -0.07972422, -0.07452193, -0.06929977, -0.06405746, -0.05879473, -0.05351144,
    -0.04820737, -0.04288221, -0.03753570, -0.03216770, -0.02677793, -0.02136609,
    -0.01593192, -0.01047526, -0.00499577, 0.00050685, 0.00603282, 0.01158239,
    0.01715590, 0.02275367, 0.02837589, 0.03402290, 0.03969506, 0.04539263,
    0.05111589, 0.05686521, 0.06264095, 0.06844335, 0.07427278, 0.08012964,
    0.08601424, 0.09192690, 0.09786804, 0.10383804, 0.10983721, 0.11586598,
    0.12192478, 0.12801394, 0.13413389, 0.14028509, 0.14646793, 0.15268282,
    0.15893025, 0.16521067, 0.17152449, 0.17787223, 0.18425438, 0.19067138,
    0.19712377, 0.20361207, 0.21013677, 0.21669842, 0.22329759, 0.22993480,
    0.23661064, 0.24332572, 0.25008058, 0.25687588, 0.26371224, 0.27059027,
    0.27751065, 0.28447406, 0.29148115, 0.29853266, 0.30562929, 0.31277179,
    0.31996090, 0.32719741, 0.33448211, 0.34181581, 0.34919934, 0.35663357,
    0.36411938, 0.37165766, 0.37924934, 0.38689537, 0.39459673, 0.40235442,
    0.41016947, 0.41804295, 0.42597592, 0.43396954, 0.44202493, 0.45014329,
    0.45832584, 0.46657381, 0.47488854, 0.48327131, 0.49172354, 0.50024661,
    0.50884199, 0.51751120, 0.52625575, 0.53507730, 0.54397744, 0.55295795,
    0.56202052, 0.57116704, 0.58039934, 0.58971942, 0.59912928, 0.60863098,
    0.61822675, 0.62791875, 0.63770941, 0.64760102, 0.65759621, 0.66769745,
    0.67790756, 0.68822922, 0.69866547, 0.70921922, 0.71989372, 0.73069221,
    0.74161809, 0.75267501, 0.76386656, 0.77519680, 0.78666958, 0.79828935,
    0.81006037, 0.82198736, 0.83407525, 0.84632895, 0.85875403, 0.87135592,
    0.88414056, 0.89711428, 0.91028341, 0.92365490, 0.93723613, 0.95103454,
    0.96505830, 0.97931607, 0.99381678, 1.00856999, 1.02358599, 1.03887569,
    1.05445045, 1.07032256, 1.08650518, 1.10301234, 1.11985906, 1.13706135,
    1.15463642, 1.17260288, 1.19098075, 1.20979165, 1.22905897, 1.24880810,
    1.26906662, 1.28986460, 1.31123490, 1.33321352, 1.35584003, 1.37915800,
    1.40321572, 1.42806696, 1.45377141, 1.48039573, 1.50801533, 1.53671530,
    1.56659182, 1.59775574, 1.63033353, 1.66447234, 1.70034399, 1.73815040,
    1.77813176, 1.82057692, 1.86583760, 1.91434811, 1.96665273, 2.02344917,
    2.08565012, 2.15448428, 2.23166170, 2.31966879, 2.42232647, 2.54597258,
    2.70234653, 2.91740742, 3.27219616,
};

}  // namespace rmt::detail
