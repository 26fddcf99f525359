#pragma once

// Generated by tests/oracles/freeze.py; do not edit.

#include <vector>

namespace oracle {

struct BallValue { int n; double r_re, r_im, m_re, m_im; };
struct RootSet { int n; std::vector<std::pair<double, double>> poles, zeros; };

inline const std::vector<BallValue>& ball_values() {
  static const std::vector<BallValue> v = {
      {3, 0.001, 0.0, 1.0020010001666667, 0.0},
      {3, 0.01, 0.0, 1.0201001666666667, 0.0},
      {3, 0.5, 0.0, 2.2708333333333333, 0.0},
      {3, 1.0, 0.0, 4.1666666666666667, 0.0},
      {3, 3.0, 0.0, 20.5, 0.0},
      {3, 10.0, 0.0, 287.66666666666667, 0.0},
      {3, 50.0, 0.0, 23434.333333333333, 0.0},
      {3, 100.0, 0.0, 176867.66666666667, 0.0},
      {3, 200.0, 0.0, 1373734.3333333333, 0.0},
      {3, 2.0, 5.0, -39.666666666666667, 19.166666666666667},
      {3, -1.0, 7.0, -24.666666666666667, -53.666666666666667},
      {3, 0.29999999999999999, -20.0, -458.3055, 1280.4333333333333},
      {5, 0.001, 0.0, 1.0026687785325309, 0.0},
      {5, 0.01, 0.0, 1.0268785336428599, 0.0},
      {5, 0.5, 0.0, 2.9634300595238095, 0.0},
      {5, 1.0, 0.0, 6.6645833333333333, 0.0},
      {5, 3.0, 0.0, 60.4625, 0.0},
      {5, 10.0, 0.0, 3073.1794871794872, 0.0},
      {5, 50.0, 0.0, 3484611.534591195, 0.0},
      {5, 100.0, 0.0, 96604846.954692557, 0.0},
      {5, 200.0, 0.0, 2872752192.7898194, 0.0},
      {5, 2.0, 5.0, -103.97916666666667, -110.37916666666667},
      {5, -1.0, 7.0, 173.51918238993711, 26.941194968553459},
      {5, 0.29999999999999999, -20.0, 20854.222020995029, -19489.011669727097},
      {7, 0.001, 0.0, 1.003203241605931, 0.0},
      {7, 0.01, 0.0, 1.0323256098161038, 0.0},
      {7, 0.5, 0.0, 3.639818150011529, 0.0},
      {7, 1.0, 0.0, 9.5495556211465302, 0.0},
      {7, 3.0, 0.0, 138.80605246523388, 0.0},
      {7, 10.0, 0.0, 20497.605897346773, 0.0},
      {7, 50.0, 0.0, 265565428.72853877, 0.0},
      {7, 100.0, 0.0, 26108458217.686713, 0.0},
      {7, 200.0, 0.0, 2917277692545.6177, 0.0},
      {7, 2.0, 5.0, 91.705508944362503, -359.69901084764855},
      {7, -1.0, 7.0, -89.593457220286489, 320.01925351071693},
      {7, 0.29999999999999999, -20.0, -297633.79594721393, 24786.79402118485},
      {9, 0.001, 0.0, 1.0036615202098344, 0.0},
      {9, 0.01, 0.0, 1.0370115651665444, 0.0},
      {9, 0.5, 0.0, 4.3195243118186023, 0.0},
      {9, 1.0, 0.0, 12.85682978367159, 0.0},
      {9, 3.0, 0.0, 275.42091957588722, 0.0},
      {9, 10.0, 0.0, 101403.4936075111, 0.0},
      {9, 50.0, 0.0, 12679744552.691714, 0.0},
      {9, 100.0, 0.0, 4274491154319.0421, 0.0},
      {9, 200.0, 0.0, 1762033481338874.2, 0.0},
      {9, 2.0, 5.0, 668.59194365579318, -355.25461091000467},
      {9, -1.0, 7.0, -516.59457532111326, -31.632310945079636},
      {9, 0.29999999999999999, -20.0, 1388019.043133688, 1353033.6195726598},
      {11, 0.001, 0.0, 1.0040690079120402, 0.0},
      {11, 0.01, 0.0, 1.0411900128652856, 0.0},
      {11, 0.5, 0.0, 5.0114089434473234, 0.0},
      {11, 1.0, 0.0, 16.616873591437241, 0.0},
      {11, 3.0, 0.0, 496.22872409235326, 0.0},
      {11, 10.0, 0.0, 407196.83294384351, 0.0},
      {11, 50.0, 0.0, 424716533243.94017, 0.0},
      {11, 100.0, 0.0, 475432197337601.69, 0.0},
      {11, 200.0, 0.0, 7.1017816626397478e+17, 0.0},
      {11, 2.0, 5.0, 1345.1160411115383, 307.46035980146138},
      {11, -1.0, 7.0, -267.96575775576119, -683.607710353924},
      {11, 0.29999999999999999, -20.0, 2082877.723284881, -8641661.5111257334},
      {13, 0.001, 0.0, 1.0044395562903071, 0.0},
      {13, 0.01, 0.0, 1.0449993387975393, 0.0},
      {13, 0.5, 0.0, 5.7203578883393278, 0.0},
      {13, 1.0, 0.0, 20.859165981117712, 0.0},
      {13, 3.0, 0.0, 834.3722409506083, 0.0},
      {13, 10.0, 0.0, 1400681.873541779, 0.0},
      {13, 50.0, 0.0, 10730143003457.786, 0.0},
      {13, 100.0, 0.0, 38679716608698453.0, 0.0},
      {13, 200.0, 0.0, 2.057325443170842e+20, 0.0},
      {13, 2.0, 5.0, 1535.9523341526223, 1750.9314575752649},
      {13, -1.0, 7.0, 564.04331799014957, -811.75475755540898},
      {13, 0.29999999999999999, -20.0, -31189617.792135831, 4131316.4637766529},
      {17, 0.001, 0.0, 1.0051010906893138, 0.0},
      {17, 0.01, 0.0, 1.0518229506622928, 0.0},
      {17, 0.5, 0.0, 7.2007359592164509, 0.0},
      {17, 1.0, 0.0, 30.909982706103361, 0.0},
      {17, 3.0, 0.0, 2039.5935121578788, 0.0},
      {17, 10.0, 0.0, 11850313.076695788, 0.0},
      {17, 50.0, 0.0, 3544534614250717.7, 0.0},
      {17, 100.0, 0.0, 1.2149758345389848e+20, 0.0},
      {17, 200.0, 0.0, 7.7862988056457079e+24, 0.0},
      {17, 2.0, 5.0, -1937.2253445946092, 5345.9472477504548},
      {17, -1.0, 7.0, 1266.5707258560416, 1034.1847422001154},
      {17, 0.29999999999999999, -20.0, 209908269.86134106, -93684476.646362664},
      {21, 0.001, 0.0, 1.0056866867163138, 0.0},
      {21, 0.01, 0.0, 1.0578877713675404, 0.0},
      {21, 0.5, 0.0, 8.7759308546169529, 0.0},
      {21, 1.0, 0.0, 43.256256697243769, 0.0},
      {21, 3.0, 0.0, 4356.3043171660085, 0.0},
      {21, 10.0, 0.0, 72925379.204114098, 0.0},
      {21, 50.0, 0.0, 5.9642081119647448e+17, 0.0},
      {21, 100.0, 0.0, 1.7462170140266886e+23, 0.0},
      {21, 200.0, 0.0, 1.2629671496793497e+29, 0.0},
      {21, 2.0, 5.0, -11447.660750168409, 3867.2062724119823},
      {21, -1.0, 7.0, -1167.281147244826, 2222.5079861252351},
      {21, 0.29999999999999999, -20.0, -1032810385.6379708, 221320371.8747737},
  };
  return v;
}

inline const std::vector<RootSet>& ball_roots() {
  static const std::vector<RootSet> v = {
      {3, {}, {{-2.6299605249474367, -1.0911236359717214}, {-0.7400789501051268, 0.0}, {-2.6299605249474367, 1.0911236359717214}}},
      {5, {{-3.0, 0.0}}, {{-4.238815178015059, -2.395131259635942}, {-2.1229857519230113, -0.8901257769411157}, {-4.661627027797439, 0.0}, {-0.6147711123264189, 0.0}, {-2.1229857519230113, 0.8901257769411157}, {-4.238815178015059, 2.395131259635942}}},
      {7, {{-4.7937005259841, -1.3747296369986026}, {-2.4125989480318006, 0.0}, {-4.7937005259841, 1.3747296369986026}}, {{-5.842869717893418, -3.7828896995607053}, {-3.5671073182058013, -2.03742426895045}, {-6.510024413313255, -1.2235391660113168}, {-1.837698949334667, -0.7730391785299299}, {-3.9473350381527212, 0.0}, {-0.5372641643529964, 0.0}, {-1.837698949334667, 0.7730391785299299}, {-6.510024413313255, 1.2235391660113168}, {-3.5671073182058013, 2.03742426895045}, {-5.842869717893418, 3.7828896995607053}}},
      {9, {{-6.484293975304309, -2.7922803086551204}, {-4.0337875829139085, -1.1619709460919998}, {-6.878145113163944, 0.0}, {-2.08569177039962, 0.0}, {-4.0337875829139085, 1.1619709460919998}, {-6.484293975304309, 2.7922803086551204}}, {{-7.445627533582417, -5.216435754402838}, {-5.044437507810924, -3.300311814637537}, {-8.283839104870868, -2.5225296818040768}, {-3.1604832072107674, -1.812054066907373}, {-5.660449075868259, -1.0756349827695506}, {-1.6456714419428917, -0.6932806496885197}, {-8.530397233813748, 0.0}, {-3.5053387720917715, 0.0}, {-0.4832482515222257, 0.0}, {-1.6456714419428917, 0.6932806496885197}, {-5.660449075868259, 1.0756349827695506}, {-3.1604832072107674, 1.812054066907373}, {-8.283839104870868, 2.5225296818040768}, {-5.044437507810924, 3.300311814637537}, {-7.445627533582417, 5.216435754402838}}},
      {11, {{-8.138690384700896, -4.24198429087183}, {-5.603345533595125, -2.426520491787667}, {-8.768391737068919, -1.3716528105415327}, {-3.5735831584181708, -1.0305159681987242}, {-5.965355702037941, 0.0}, {-1.8666226703958357, 0.0}, {-3.5735831584181708, 1.0305159681987242}, {-8.768391737068919, 1.3716528105415327}, {-5.603345533595125, 2.426520491787667}, {-8.138690384700896, 4.24198429087183}}, {{-9.048158827556843, -6.679150739898195}, {-6.543052525318028, -4.630166774506442}, {-10.017595448466045, -3.8707121602273538}, {-4.539096257260618, -2.981553956771091}, {-7.329668098289738, -2.2565319381408604}, {-2.8737525857007813, -1.6507181826311628}, {-10.437586991266437, -1.2729324914669395}, {-5.1077307107696015, -0.974947893666736}, {-1.5044016346656823, -0.6342694442506015}, {-7.564177531200535, 0.0}, {-3.190907538190426, 0.0}, {-0.4428287720214867, 0.0}, {-1.5044016346656823, 0.6342694442506015}, {-5.1077307107696015, 0.974947893666736}, {-10.437586991266437, 1.2729324914669395}, {-2.8737525857007813, 1.6507181826311628}, {-7.329668098289738, 2.2565319381408604}, {-4.539096257260618, 2.981553956771091}, {-10.017595448466045, 3.8707121602273538}, {-6.543052525318028, 4.630166774506442}, {-9.048158827556843, 6.679150739898195}}},
      {13, {{-9.77595161250058, -5.714695634615448}, {-7.160455070457831, -3.75500463501671}, {-10.574277811656883, -2.7633690732696796}, {-5.043725471018868, -2.1878369306481695}, {-7.750740891783257, -1.222380796620817}, {-3.249135663377788, -0.9373427771606366}, {-10.80911724733388, 0.0}, {-5.376489779589311, 0.0}, {-1.7058199314863964, 0.0}, {-3.249135663377788, 0.9373427771606366}, {-7.750740891783257, 1.222380796620817}, {-5.043725471018868, 2.1878369306481695}, {-10.574277811656883, 2.7633690732696796}, {-7.160455070457831, 3.75500463501671}, {-9.77595161250058, 5.714695634615448}}, {{-10.650845607816665, -8.16220194049958}, {-8.056603349078594, -6.004066903770422}, {-11.726591055901281, -5.2537110516783345}, {-5.954016516213139, -4.230264684583931}, {-8.97648847046823, -3.5059805185426023}, {-4.171760941831834, -2.7458858166794946}, {-12.279867503438265, -2.5849606078210994}, {-6.688745355390805, -2.068978249813452}, {-2.6557759194797765, -1.527128414211501}, {-9.380721057230904, -1.156334259972176}, {-4.701251916837912, -0.8994720673651608}, {-1.3946172027267754, -0.5882638834598305}, {-12.45400259411173, 0.0}, {-6.909533666057069, 0.0}, {-2.950780936424794, 0.0}, {-0.41111301057804606, 0.0}, {-1.3946172027267754, 0.5882638834598305}, {-4.701251916837912, 0.8994720673651608}, {-9.380721057230904, 1.156334259972176}, {-2.6557759194797765, 1.527128414211501}, {-6.688745355390805, 2.068978249813452}, {-12.279867503438265, 2.5849606078210994}, {-4.171760941831834, 2.7458858166794946}, {-8.97648847046823, 3.5059805185426023}, {-5.954016516213139, 4.230264684583931}, {-11.726591055901281, 5.2537110516783345}, {-8.056603349078594, 6.004066903770422}, {-10.650845607816665, 8.16220194049958}}},
      {17, {{-13.025865289439423, -8.707356019427703}, {-10.270153287054214, -6.529542124930906}, {-14.062403984929912, -5.605459461550076}, {-8.003330630073382, -4.718624475222437}, {-11.159934772911896, -3.810929838180765}, {-6.041651523165874, -3.177749326956363}, {-14.595348405462868, -2.7581413173872185}, {-8.716149923924675, -2.305278968954358}, {-4.319324920032184, -1.8757231941370873}, {-11.550831878733764, -1.2565954728938058}, {-6.557480873631664, -1.0390909957180767}, {-2.8061690615735584, -0.8098050499161945}, {-14.76312256462144, 0.0}, {-8.930366403663783, 0.0}, {-4.6088285625777266, 0.0}, {-1.480393367270222, 0.0}, {-2.8061690615735584, 0.8098050499161945}, {-6.557480873631664, 1.0390909957180767}, {-11.550831878733764, 1.2565954728938058}, {-4.319324920032184, 1.8757231941370873}, {-8.716149923924675, 2.305278968954358}, {-14.595348405462868, 2.7581413173872185}, {-6.041651523165874, 3.177749326956363}, {-11.159934772911896, 3.810929838180765}, {-8.003330630073382, 4.718624475222437}, {-14.062403984929912, 5.605459461550076}, {-10.270153287054214, 6.529542124930906}, {-13.025865289439423, 8.707356019427703}}, {{-13.85715512469297, -11.170039274491355}, {-11.114576103509743, -8.838001355498589}, {-15.0992102127113, -8.092070528005411}, {-8.854511653371926, -6.873850069446419}, {-12.235917757478006, -6.138058938716781}, {-15.85100595461898, -5.29563892592242}, {-6.8946620995305885, -5.169733202840094}, {-9.830109112597876, -4.472638778002624}, {-5.170426267808204, -3.686212909108678}, {-12.881462979512387, -3.630603645126335}, {-7.714047888457001, -3.035964776764353}, {-16.268287015740764, -2.6224501354411505}, {-3.654613454421961, -2.4103343639627446}, {-10.344033066466423, -2.211639246707899}, {-5.8227865188807195, -1.8087143178973446}, {-2.339376326447897, -1.3466962458820304}, {-13.18383371035555, -1.2025798970714883}, {-8.079454545652231, -1.00376857868479}, {-4.124424538921474, -0.7909570144646134}, {-1.2325440399305243, -0.5201717845209483}, {-16.40282045613127, 0.0}, {-10.506985001766564, 0.0}, {-6.020382022901241, 0.0}, {-2.601013656929586, 0.0}, {-0.36392212005828994, 0.0}, {-1.2325440399305243, 0.5201717845209483}, {-4.124424538921474, 0.7909570144646134}, {-8.079454545652231, 1.00376857868479}, {-13.18383371035555, 1.2025798970714883}, {-2.339376326447897, 1.3466962458820304}, {-5.8227865188807195, 1.8087143178973446}, {-10.344033066466423, 2.211639246707899}, {-3.654613454421961, 2.4103343639627446}, {-16.268287015740764, 2.6224501354411505}, {-7.714047888457001, 3.035964776764353}, {-12.881462979512387, 3.630603645126335}, {-5.170426267808204, 3.686212909108678}, {-9.830109112597876, 4.472638778002624}, {-6.8946620995305885, 5.169733202840094}, {-15.85100595461898, 5.29563892592242}, {-12.235917757478006, 6.138058938716781}, {-8.854511653371926, 6.873850069446419}, {-15.0992102127113, 8.092070528005411}, {-11.114576103509743, 8.838001355498589}, {-13.85715512469297, 11.170039274491355}}},
      {21, {{-16.260160646805, -11.742385291571587}, {-13.386441844227612, -9.40080974755199}, {-17.46557191671733, -8.508363865837758}, {-10.997516057005749, -7.415924883117293}, {-14.477839179113959, -6.527607421576048}, {-8.902882556662602, -5.680528673199394}, {-18.194800600111073, -5.568554322288784}, {-11.948787220395403, -4.822699218444691}, {-7.032457412733846, -4.153438717690376}, {-15.105777588685728, -3.8604518496762816}, {-9.70338734197413, -3.3328206965140543}, {-5.352970888654304, -2.8179590224983153}, {-18.599621783668656, -2.7576957861551543}, {-12.449712847865566, -2.3839505218754353}, {-7.671518235545335, -2.035114591241706}, {-3.847734059237414, -1.6715789820283018}, {-15.399920504983406, -1.2786152367251926}, {-10.0603446442706, -1.1014059151899238}, {-5.815226500813927, -0.922903114268381}, {-2.5086506534950193, -0.72403080455793}, {-18.7301586817599, 0.0}, {-12.608559306356284, 0.0}, {-7.865130499634935, 0.0}, {-4.1071897560095305, 0.0}, {-1.326316790306031, 0.0}, {-2.5086506534950193, 0.72403080455793}, {-5.815226500813927, 0.922903114268381}, {-10.0603446442706, 1.1014059151899238}, {-15.399920504983406, 1.2786152367251926}, {-3.847734059237414, 1.6715789820283018}, {-7.671518235545335, 2.035114591241706}, {-12.449712847865566, 2.3839505218754353}, {-18.599621783668656, 2.7576957861551543}, {-5.352970888654304, 2.8179590224983153}, {-9.70338734197413, 3.3328206965140543}, {-15.105777588685728, 3.8604518496762816}, {-7.032457412733846, 4.153438717690376}, {-11.948787220395403, 4.822699218444691}, {-18.194800600111073, 5.568554322288784}, {-8.902882556662602, 5.680528673199394}, {-14.477839179113959, 6.527607421576048}, {-10.997516057005749, 7.415924883117293}, {-17.46557191671733, 8.508363865837758}, {-13.386441844227612, 9.40080974755199}, {-16.260160646805, 11.742385291571587}}, {{-17.06484052003408, -14.21564591024637}, {-14.200692571797074, -11.7467737379511}, {-18.43499743789672, -10.996605455086664}, {-11.816309245919792, -9.638828466935022}, {-15.472466555807546, -8.88528896518613}, {-19.33300919228359, -8.08893313091385}, {-9.722065477116862, -7.776622295106463}, {-12.965674306016604, -7.052896452461717}, {-16.28928132049348, -6.247050258730435}, {-7.848214054379313, -6.114304337206157}, {-10.741819027302464, -5.431014747307421}, {-19.92054767168542, -5.329461068804096}, {-13.678296336630781, -4.639806322776067}, {-6.161716113931088, -4.630679899425081}, {-8.732949846919807, -3.9922010836806896}, {-16.79239791775905, -3.714232931157586}, {-4.64648711302673, -3.317588322998242}, {-11.338606931866208, -3.2222164088722876}, {-6.904747636628924, -2.7254867242707372}, {-20.256489362593815, -2.6476019716655577}, {-14.077300869473378, -2.303830263461204}, {-3.2968799344480706, -2.176445857730734}, {-9.203908257941462, -1.9776812638800172}, {-5.2383162461616175, -1.6301679392066049}, {-17.034028874438942, -1.232857546066493}, {-2.115894241668871, -1.2187176296607267}, {-11.620039535982755, -1.0687885829416583}, {-7.238250668422475, -0.902044182676536}, {-3.723234754577866, -0.7148088548421743}, {-1.1166392786240777, -0.47138183403688266}, {-20.36605122682003, 0.0}, {-14.206359577590169, 0.0}, {-9.353843779321442, 0.0}, {-5.4182375018251285, 0.0}, {-2.3533335355385123, 0.0}, {-0.3299717752469945, 0.0}, {-1.1166392786240777, 0.47138183403688266}, {-3.723234754577866, 0.7148088548421743}, {-7.238250668422475, 0.902044182676536}, {-11.620039535982755, 1.0687885829416583}, {-2.115894241668871, 1.2187176296607267}, {-17.034028874438942, 1.232857546066493}, {-5.2383162461616175, 1.6301679392066049}, {-9.203908257941462, 1.9776812638800172}, {-3.2968799344480706, 2.176445857730734}, {-14.077300869473378, 2.303830263461204}, {-20.256489362593815, 2.6476019716655577}, {-6.904747636628924, 2.7254867242707372}, {-11.338606931866208, 3.2222164088722876}, {-4.64648711302673, 3.317588322998242}, {-16.79239791775905, 3.714232931157586}, {-8.732949846919807, 3.9922010836806896}, {-6.161716113931088, 4.630679899425081}, {-13.678296336630781, 4.639806322776067}, {-19.92054767168542, 5.329461068804096}, {-10.741819027302464, 5.431014747307421}, {-7.848214054379313, 6.114304337206157}, {-16.28928132049348, 6.247050258730435}, {-12.965674306016604, 7.052896452461717}, {-9.722065477116862, 7.776622295106463}, {-19.33300919228359, 8.08893313091385}, {-15.472466555807546, 8.88528896518613}, {-11.816309245919792, 9.638828466935022}, {-18.43499743789672, 10.996605455086664}, {-14.200692571797074, 11.7467737379511}, {-17.06484052003408, 14.21564591024637}}},
  };
  return v;
}

// Roots of sinh(2z) - 2z with Re > 0, Im > 0, ascending Im.
inline const std::vector<std::pair<double, double>>& shell_roots() {
  static const std::vector<std::pair<double, double>> v = {
      {1.3843391414936608, 3.7488381388881927},
      {1.6761049424267525, 6.949979856988232},
      {1.8583838398762496, 10.11925885391501},
      {1.9915708201699809, 13.27727363274578},
      {2.0966257352156043, 16.429870502534931},
      {2.1833975588353092, 19.579408260032493},
      {2.2573202247406514, 22.727035732177556},
      {2.3217139785259482, 25.873384151410893},
      {2.3787575590408104, 29.018831029547134},
      {2.4299583239485482, 32.163616856642783},
      {2.4764026787094722, 35.307902530664785},
      {2.5188995966459038, 38.451800004644196},
  };
  return v;
}

}  // namespace oracle
