// Canonical decomposition, combining-class, and composition tables
// derived from the Unicode Character Database. Generated file; do not edit.

#include "spanlab/unicode.hpp"

#include <cstdint>

namespace spanlab::unicode::detail {

const DecompRow kDecompRows[] = {
    {192,2,0}, {193,2,2}, {194,2,4}, {195,2,6}, {196,2,8}, {197,2,10},
    {199,2,12}, {200,2,14}, {201,2,16}, {202,2,18}, {203,2,20}, {204,2,22},
    {205,2,24}, {206,2,26}, {207,2,28}, {209,2,30}, {210,2,32}, {211,2,34},
    {212,2,36}, {213,2,38}, {214,2,40}, {217,2,42}, {218,2,44}, {219,2,46},
    {220,2,48}, {221,2,50}, {224,2,52}, {225,2,54}, {226,2,56}, {227,2,58},
    {228,2,60}, {229,2,62}, {231,2,64}, {232,2,66}, {233,2,68}, {234,2,70},
    {235,2,72}, {236,2,74}, {237,2,76}, {238,2,78}, {239,2,80}, {241,2,82},
    {242,2,84}, {243,2,86}, {244,2,88}, {245,2,90}, {246,2,92}, {249,2,94},
    {250,2,96}, {251,2,98}, {252,2,100}, {253,2,102}, {255,2,104}, {256,2,106},
    {257,2,108}, {258,2,110}, {259,2,112}, {260,2,114}, {261,2,116}, {262,2,118},
    {263,2,120}, {264,2,122}, {265,2,124}, {266,2,126}, {267,2,128}, {268,2,130},
    {269,2,132}, {270,2,134}, {271,2,136}, {274,2,138}, {275,2,140}, {276,2,142},
    {277,2,144}, {278,2,146}, {279,2,148}, {280,2,150}, {281,2,152}, {282,2,154},
    {283,2,156}, {284,2,158}, {285,2,160}, {286,2,162}, {287,2,164}, {288,2,166},
    {289,2,168}, {290,2,170}, {291,2,172}, {292,2,174}, {293,2,176}, {296,2,178},
    {297,2,180}, {298,2,182}, {299,2,184}, {300,2,186}, {301,2,188}, {302,2,190},
    {303,2,192}, {304,2,194}, {308,2,196}, {309,2,198}, {310,2,200}, {311,2,202},
    {313,2,204}, {314,2,206}, {315,2,208}, {316,2,210}, {317,2,212}, {318,2,214},
    {323,2,216}, {324,2,218}, {325,2,220}, {326,2,222}, {327,2,224}, {328,2,226},
    {332,2,228}, {333,2,230}, {334,2,232}, {335,2,234}, {336,2,236}, {337,2,238},
    {340,2,240}, {341,2,242}, {342,2,244}, {343,2,246}, {344,2,248}, {345,2,250},
    {346,2,252}, {347,2,254}, {348,2,256}, {349,2,258}, {350,2,260}, {351,2,262},
    {352,2,264}, {353,2,266}, {354,2,268}, {355,2,270}, {356,2,272}, {357,2,274},
    {360,2,276}, {361,2,278}, {362,2,280}, {363,2,282}, {364,2,284}, {365,2,286},
    {366,2,288}, {367,2,290}, {368,2,292}, {369,2,294}, {370,2,296}, {371,2,298},
    {372,2,300}, {373,2,302}, {374,2,304}, {375,2,306}, {376,2,308}, {377,2,310},
    {378,2,312}, {379,2,314}, {380,2,316}, {381,2,318}, {382,2,320}, {416,2,322},
    {417,2,324}, {431,2,326}, {432,2,328}, {461,2,330}, {462,2,332}, {463,2,334},
    {464,2,336}, {465,2,338}, {466,2,340}, {467,2,342}, {468,2,344}, {469,3,346},
    {470,3,349}, {471,3,352}, {472,3,355}, {473,3,358}, {474,3,361}, {475,3,364},
    {476,3,367}, {478,3,370}, {479,3,373}, {480,3,376}, {481,3,379}, {482,2,382},
    {483,2,384}, {486,2,386}, {487,2,388}, {488,2,390}, {489,2,392}, {490,2,394},
    {491,2,396}, {492,3,398}, {493,3,401}, {494,2,404}, {495,2,406}, {496,2,408},
    {500,2,410}, {501,2,412}, {504,2,414}, {505,2,416}, {506,3,418}, {507,3,421},
    {508,2,424}, {509,2,426}, {510,2,428}, {511,2,430}, {512,2,432}, {513,2,434},
    {514,2,436}, {515,2,438}, {516,2,440}, {517,2,442}, {518,2,444}, {519,2,446},
    {520,2,448}, {521,2,450}, {522,2,452}, {523,2,454}, {524,2,456}, {525,2,458},
    {526,2,460}, {527,2,462}, {528,2,464}, {529,2,466}, {530,2,468}, {531,2,470},
    {532,2,472}, {533,2,474}, {534,2,476}, {535,2,478}, {536,2,480}, {537,2,482},
    {538,2,484}, {539,2,486}, {542,2,488}, {543,2,490}, {550,2,492}, {551,2,494},
    {552,2,496}, {553,2,498}, {554,3,500}, {555,3,503}, {556,3,506}, {557,3,509},
    {558,2,512}, {559,2,514}, {560,3,516}, {561,3,519}, {562,2,522}, {563,2,524},
    {832,1,526}, {833,1,527}, {835,1,528}, {836,2,529}, {884,1,531}, {894,1,532},
    {901,2,533}, {902,2,535}, {903,1,537}, {904,2,538}, {905,2,540}, {906,2,542},
    {908,2,544}, {910,2,546}, {911,2,548}, {912,3,550}, {938,2,553}, {939,2,555},
    {940,2,557}, {941,2,559}, {942,2,561}, {943,2,563}, {944,3,565}, {970,2,568},
    {971,2,570}, {972,2,572}, {973,2,574}, {974,2,576}, {979,2,578}, {980,2,580},
    {1024,2,582}, {1025,2,584}, {1027,2,586}, {1031,2,588}, {1036,2,590}, {1037,2,592},
    {1038,2,594}, {1049,2,596}, {1081,2,598}, {1104,2,600}, {1105,2,602}, {1107,2,604},
    {1111,2,606}, {1116,2,608}, {1117,2,610}, {1118,2,612}, {1142,2,614}, {1143,2,616},
    {1217,2,618}, {1218,2,620}, {1232,2,622}, {1233,2,624}, {1234,2,626}, {1235,2,628},
    {1238,2,630}, {1239,2,632}, {1242,2,634}, {1243,2,636}, {1244,2,638}, {1245,2,640},
    {1246,2,642}, {1247,2,644}, {1250,2,646}, {1251,2,648}, {1252,2,650}, {1253,2,652},
    {1254,2,654}, {1255,2,656}, {1258,2,658}, {1259,2,660}, {1260,2,662}, {1261,2,664},
    {1262,2,666}, {1263,2,668}, {1264,2,670}, {1265,2,672}, {1266,2,674}, {1267,2,676},
    {1268,2,678}, {1269,2,680}, {1272,2,682}, {1273,2,684}, {1570,2,686}, {1571,2,688},
    {1572,2,690}, {1573,2,692}, {1574,2,694}, {1728,2,696}, {1730,2,698}, {1747,2,700},
    {2345,2,702}, {2353,2,704}, {2356,2,706}, {2392,2,708}, {2393,2,710}, {2394,2,712},
    {2395,2,714}, {2396,2,716}, {2397,2,718}, {2398,2,720}, {2399,2,722}, {2507,2,724},
    {2508,2,726}, {2524,2,728}, {2525,2,730}, {2527,2,732}, {2611,2,734}, {2614,2,736},
    {2649,2,738}, {2650,2,740}, {2651,2,742}, {2654,2,744}, {2888,2,746}, {2891,2,748},
    {2892,2,750}, {2908,2,752}, {2909,2,754}, {2964,2,756}, {3018,2,758}, {3019,2,760},
    {3020,2,762}, {3144,2,764}, {3264,2,766}, {3271,2,768}, {3272,2,770}, {3274,2,772},
    {3275,3,774}, {3402,2,777}, {3403,2,779}, {3404,2,781}, {3546,2,783}, {3548,2,785},
    {3549,3,787}, {3550,2,790}, {3907,2,792}, {3917,2,794}, {3922,2,796}, {3927,2,798},
    {3932,2,800}, {3945,2,802}, {3955,2,804}, {3957,2,806}, {3958,2,808}, {3960,2,810},
    {3969,2,812}, {3987,2,814}, {3997,2,816}, {4002,2,818}, {4007,2,820}, {4012,2,822},
    {4025,2,824}, {4134,2,826}, {6918,2,828}, {6920,2,830}, {6922,2,832}, {6924,2,834},
    {6926,2,836}, {6930,2,838}, {6971,2,840}, {6973,2,842}, {6976,2,844}, {6977,2,846},
    {6979,2,848}, {7680,2,850}, {7681,2,852}, {7682,2,854}, {7683,2,856}, {7684,2,858},
    {7685,2,860}, {7686,2,862}, {7687,2,864}, {7688,3,866}, {7689,3,869}, {7690,2,872},
    {7691,2,874}, {7692,2,876}, {7693,2,878}, {7694,2,880}, {7695,2,882}, {7696,2,884},
    {7697,2,886}, {7698,2,888}, {7699,2,890}, {7700,3,892}, {7701,3,895}, {7702,3,898},
    {7703,3,901}, {7704,2,904}, {7705,2,906}, {7706,2,908}, {7707,2,910}, {7708,3,912},
    {7709,3,915}, {7710,2,918}, {7711,2,920}, {7712,2,922}, {7713,2,924}, {7714,2,926},
    {7715,2,928}, {7716,2,930}, {7717,2,932}, {7718,2,934}, {7719,2,936}, {7720,2,938},
    {7721,2,940}, {7722,2,942}, {7723,2,944}, {7724,2,946}, {7725,2,948}, {7726,3,950},
    {7727,3,953}, {7728,2,956}, {7729,2,958}, {7730,2,960}, {7731,2,962}, {7732,2,964},
    {7733,2,966}, {7734,2,968}, {7735,2,970}, {7736,3,972}, {7737,3,975}, {7738,2,978},
    {7739,2,980}, {7740,2,982}, {7741,2,984}, {7742,2,986}, {7743,2,988}, {7744,2,990},
    {7745,2,992}, {7746,2,994}, {7747,2,996}, {7748,2,998}, {7749,2,1000}, {7750,2,1002},
    {7751,2,1004}, {7752,2,1006}, {7753,2,1008}, {7754,2,1010}, {7755,2,1012}, {7756,3,1014},
    {7757,3,1017}, {7758,3,1020}, {7759,3,1023}, {7760,3,1026}, {7761,3,1029}, {7762,3,1032},
    {7763,3,1035}, {7764,2,1038}, {7765,2,1040}, {7766,2,1042}, {7767,2,1044}, {7768,2,1046},
    {7769,2,1048}, {7770,2,1050}, {7771,2,1052}, {7772,3,1054}, {7773,3,1057}, {7774,2,1060},
    {7775,2,1062}, {7776,2,1064}, {7777,2,1066}, {7778,2,1068}, {7779,2,1070}, {7780,3,1072},
    {7781,3,1075}, {7782,3,1078}, {7783,3,1081}, {7784,3,1084}, {7785,3,1087}, {7786,2,1090},
    {7787,2,1092}, {7788,2,1094}, {7789,2,1096}, {7790,2,1098}, {7791,2,1100}, {7792,2,1102},
    {7793,2,1104}, {7794,2,1106}, {7795,2,1108}, {7796,2,1110}, {7797,2,1112}, {7798,2,1114},
    {7799,2,1116}, {7800,3,1118}, {7801,3,1121}, {7802,3,1124}, {7803,3,1127}, {7804,2,1130},
    {7805,2,1132}, {7806,2,1134}, {7807,2,1136}, {7808,2,1138}, {7809,2,1140}, {7810,2,1142},
    {7811,2,1144}, {7812,2,1146}, {7813,2,1148}, {7814,2,1150}, {7815,2,1152}, {7816,2,1154},
    {7817,2,1156}, {7818,2,1158}, {7819,2,1160}, {7820,2,1162}, {7821,2,1164}, {7822,2,1166},
    {7823,2,1168}, {7824,2,1170}, {7825,2,1172}, {7826,2,1174}, {7827,2,1176}, {7828,2,1178},
    {7829,2,1180}, {7830,2,1182}, {7831,2,1184}, {7832,2,1186}, {7833,2,1188}, {7835,2,1190},
    {7840,2,1192}, {7841,2,1194}, {7842,2,1196}, {7843,2,1198}, {7844,3,1200}, {7845,3,1203},
    {7846,3,1206}, {7847,3,1209}, {7848,3,1212}, {7849,3,1215}, {7850,3,1218}, {7851,3,1221},
    {7852,3,1224}, {7853,3,1227}, {7854,3,1230}, {7855,3,1233}, {7856,3,1236}, {7857,3,1239},
    {7858,3,1242}, {7859,3,1245}, {7860,3,1248}, {7861,3,1251}, {7862,3,1254}, {7863,3,1257},
    {7864,2,1260}, {7865,2,1262}, {7866,2,1264}, {7867,2,1266}, {7868,2,1268}, {7869,2,1270},
    {7870,3,1272}, {7871,3,1275}, {7872,3,1278}, {7873,3,1281}, {7874,3,1284}, {7875,3,1287},
    {7876,3,1290}, {7877,3,1293}, {7878,3,1296}, {7879,3,1299}, {7880,2,1302}, {7881,2,1304},
    {7882,2,1306}, {7883,2,1308}, {7884,2,1310}, {7885,2,1312}, {7886,2,1314}, {7887,2,1316},
    {7888,3,1318}, {7889,3,1321}, {7890,3,1324}, {7891,3,1327}, {7892,3,1330}, {7893,3,1333},
    {7894,3,1336}, {7895,3,1339}, {7896,3,1342}, {7897,3,1345}, {7898,3,1348}, {7899,3,1351},
    {7900,3,1354}, {7901,3,1357}, {7902,3,1360}, {7903,3,1363}, {7904,3,1366}, {7905,3,1369},
    {7906,3,1372}, {7907,3,1375}, {7908,2,1378}, {7909,2,1380}, {7910,2,1382}, {7911,2,1384},
    {7912,3,1386}, {7913,3,1389}, {7914,3,1392}, {7915,3,1395}, {7916,3,1398}, {7917,3,1401},
    {7918,3,1404}, {7919,3,1407}, {7920,3,1410}, {7921,3,1413}, {7922,2,1416}, {7923,2,1418},
    {7924,2,1420}, {7925,2,1422}, {7926,2,1424}, {7927,2,1426}, {7928,2,1428}, {7929,2,1430},
    {7936,2,1432}, {7937,2,1434}, {7938,3,1436}, {7939,3,1439}, {7940,3,1442}, {7941,3,1445},
    {7942,3,1448}, {7943,3,1451}, {7944,2,1454}, {7945,2,1456}, {7946,3,1458}, {7947,3,1461},
    {7948,3,1464}, {7949,3,1467}, {7950,3,1470}, {7951,3,1473}, {7952,2,1476}, {7953,2,1478},
    {7954,3,1480}, {7955,3,1483}, {7956,3,1486}, {7957,3,1489}, {7960,2,1492}, {7961,2,1494},
    {7962,3,1496}, {7963,3,1499}, {7964,3,1502}, {7965,3,1505}, {7968,2,1508}, {7969,2,1510},
    {7970,3,1512}, {7971,3,1515}, {7972,3,1518}, {7973,3,1521}, {7974,3,1524}, {7975,3,1527},
    {7976,2,1530}, {7977,2,1532}, {7978,3,1534}, {7979,3,1537}, {7980,3,1540}, {7981,3,1543},
    {7982,3,1546}, {7983,3,1549}, {7984,2,1552}, {7985,2,1554}, {7986,3,1556}, {7987,3,1559},
    {7988,3,1562}, {7989,3,1565}, {7990,3,1568}, {7991,3,1571}, {7992,2,1574}, {7993,2,1576},
    {7994,3,1578}, {7995,3,1581}, {7996,3,1584}, {7997,3,1587}, {7998,3,1590}, {7999,3,1593},
    {8000,2,1596}, {8001,2,1598}, {8002,3,1600}, {8003,3,1603}, {8004,3,1606}, {8005,3,1609},
    {8008,2,1612}, {8009,2,1614}, {8010,3,1616}, {8011,3,1619}, {8012,3,1622}, {8013,3,1625},
    {8016,2,1628}, {8017,2,1630}, {8018,3,1632}, {8019,3,1635}, {8020,3,1638}, {8021,3,1641},
    {8022,3,1644}, {8023,3,1647}, {8025,2,1650}, {8027,3,1652}, {8029,3,1655}, {8031,3,1658},
    {8032,2,1661}, {8033,2,1663}, {8034,3,1665}, {8035,3,1668}, {8036,3,1671}, {8037,3,1674},
    {8038,3,1677}, {8039,3,1680}, {8040,2,1683}, {8041,2,1685}, {8042,3,1687}, {8043,3,1690},
    {8044,3,1693}, {8045,3,1696}, {8046,3,1699}, {8047,3,1702}, {8048,2,1705}, {8049,2,1707},
    {8050,2,1709}, {8051,2,1711}, {8052,2,1713}, {8053,2,1715}, {8054,2,1717}, {8055,2,1719},
    {8056,2,1721}, {8057,2,1723}, {8058,2,1725}, {8059,2,1727}, {8060,2,1729}, {8061,2,1731},
    {8064,3,1733}, {8065,3,1736}, {8066,4,1739}, {8067,4,1743}, {8068,4,1747}, {8069,4,1751},
    {8070,4,1755}, {8071,4,1759}, {8072,3,1763}, {8073,3,1766}, {8074,4,1769}, {8075,4,1773},
    {8076,4,1777}, {8077,4,1781}, {8078,4,1785}, {8079,4,1789}, {8080,3,1793}, {8081,3,1796},
    {8082,4,1799}, {8083,4,1803}, {8084,4,1807}, {8085,4,1811}, {8086,4,1815}, {8087,4,1819},
    {8088,3,1823}, {8089,3,1826}, {8090,4,1829}, {8091,4,1833}, {8092,4,1837}, {8093,4,1841},
    {8094,4,1845}, {8095,4,1849}, {8096,3,1853}, {8097,3,1856}, {8098,4,1859}, {8099,4,1863},
    {8100,4,1867}, {8101,4,1871}, {8102,4,1875}, {8103,4,1879}, {8104,3,1883}, {8105,3,1886},
    {8106,4,1889}, {8107,4,1893}, {8108,4,1897}, {8109,4,1901}, {8110,4,1905}, {8111,4,1909},
    {8112,2,1913}, {8113,2,1915}, {8114,3,1917}, {8115,2,1920}, {8116,3,1922}, {8118,2,1925},
    {8119,3,1927}, {8120,2,1930}, {8121,2,1932}, {8122,2,1934}, {8123,2,1936}, {8124,2,1938},
    {8126,1,1940}, {8129,2,1941}, {8130,3,1943}, {8131,2,1946}, {8132,3,1948}, {8134,2,1951},
    {8135,3,1953}, {8136,2,1956}, {8137,2,1958}, {8138,2,1960}, {8139,2,1962}, {8140,2,1964},
    {8141,2,1966}, {8142,2,1968}, {8143,2,1970}, {8144,2,1972}, {8145,2,1974}, {8146,3,1976},
    {8147,3,1979}, {8150,2,1982}, {8151,3,1984}, {8152,2,1987}, {8153,2,1989}, {8154,2,1991},
    {8155,2,1993}, {8157,2,1995}, {8158,2,1997}, {8159,2,1999}, {8160,2,2001}, {8161,2,2003},
    {8162,3,2005}, {8163,3,2008}, {8164,2,2011}, {8165,2,2013}, {8166,2,2015}, {8167,3,2017},
    {8168,2,2020}, {8169,2,2022}, {8170,2,2024}, {8171,2,2026}, {8172,2,2028}, {8173,2,2030},
    {8174,2,2032}, {8175,1,2034}, {8178,3,2035}, {8179,2,2038}, {8180,3,2040}, {8182,2,2043},
    {8183,3,2045}, {8184,2,2048}, {8185,2,2050}, {8186,2,2052}, {8187,2,2054}, {8188,2,2056},
    {8189,1,2058}, {8192,1,2059}, {8193,1,2060}, {8486,1,2061}, {8490,1,2062}, {8491,2,2063},
    {8602,2,2065}, {8603,2,2067}, {8622,2,2069}, {8653,2,2071}, {8654,2,2073}, {8655,2,2075},
    {8708,2,2077}, {8713,2,2079}, {8716,2,2081}, {8740,2,2083}, {8742,2,2085}, {8769,2,2087},
    {8772,2,2089}, {8775,2,2091}, {8777,2,2093}, {8800,2,2095}, {8802,2,2097}, {8813,2,2099},
    {8814,2,2101}, {8815,2,2103}, {8816,2,2105}, {8817,2,2107}, {8820,2,2109}, {8821,2,2111},
    {8824,2,2113}, {8825,2,2115}, {8832,2,2117}, {8833,2,2119}, {8836,2,2121}, {8837,2,2123},
    {8840,2,2125}, {8841,2,2127}, {8876,2,2129}, {8877,2,2131}, {8878,2,2133}, {8879,2,2135},
    {8928,2,2137}, {8929,2,2139}, {8930,2,2141}, {8931,2,2143}, {8938,2,2145}, {8939,2,2147},
    {8940,2,2149}, {8941,2,2151}, {9001,1,2153}, {9002,1,2154}, {10972,2,2155}, {12364,2,2157},
    {12366,2,2159}, {12368,2,2161}, {12370,2,2163}, {12372,2,2165}, {12374,2,2167}, {12376,2,2169},
    {12378,2,2171}, {12380,2,2173}, {12382,2,2175}, {12384,2,2177}, {12386,2,2179}, {12389,2,2181},
    {12391,2,2183}, {12393,2,2185}, {12400,2,2187}, {12401,2,2189}, {12403,2,2191}, {12404,2,2193},
    {12406,2,2195}, {12407,2,2197}, {12409,2,2199}, {12410,2,2201}, {12412,2,2203}, {12413,2,2205},
    {12436,2,2207}, {12446,2,2209}, {12460,2,2211}, {12462,2,2213}, {12464,2,2215}, {12466,2,2217},
    {12468,2,2219}, {12470,2,2221}, {12472,2,2223}, {12474,2,2225}, {12476,2,2227}, {12478,2,2229},
    {12480,2,2231}, {12482,2,2233}, {12485,2,2235}, {12487,2,2237}, {12489,2,2239}, {12496,2,2241},
    {12497,2,2243}, {12499,2,2245}, {12500,2,2247}, {12502,2,2249}, {12503,2,2251}, {12505,2,2253},
    {12506,2,2255}, {12508,2,2257}, {12509,2,2259}, {12532,2,2261}, {12535,2,2263}, {12536,2,2265},
    {12537,2,2267}, {12538,2,2269}, {12542,2,2271}, {63744,1,2273}, {63745,1,2274}, {63746,1,2275},
    {63747,1,2276}, {63748,1,2277}, {63749,1,2278}, {63750,1,2279}, {63751,1,2280}, {63752,1,2281},
    {63753,1,2282}, {63754,1,2283}, {63755,1,2284}, {63756,1,2285}, {63757,1,2286}, {63758,1,2287},
    {63759,1,2288}, {63760,1,2289}, {63761,1,2290}, {63762,1,2291}, {63763,1,2292}, {63764,1,2293},
    {63765,1,2294}, {63766,1,2295}, {63767,1,2296}, {63768,1,2297}, {63769,1,2298}, {63770,1,2299},
    {63771,1,2300}, {63772,1,2301}, {63773,1,2302}, {63774,1,2303}, {63775,1,2304}, {63776,1,2305},
    {63777,1,2306}, {63778,1,2307}, {63779,1,2308}, {63780,1,2309}, {63781,1,2310}, {63782,1,2311},
    {63783,1,2312}, {63784,1,2313}, {63785,1,2314}, {63786,1,2315}, {63787,1,2316}, {63788,1,2317},
    {63789,1,2318}, {63790,1,2319}, {63791,1,2320}, {63792,1,2321}, {63793,1,2322}, {63794,1,2323},
    {63795,1,2324}, {63796,1,2325}, {63797,1,2326}, {63798,1,2327}, {63799,1,2328}, {63800,1,2329},
    {63801,1,2330}, {63802,1,2331}, {63803,1,2332}, {63804,1,2333}, {63805,1,2334}, {63806,1,2335},
    {63807,1,2336}, {63808,1,2337}, {63809,1,2338}, {63810,1,2339}, {63811,1,2340}, {63812,1,2341},
    {63813,1,2342}, {63814,1,2343}, {63815,1,2344}, {63816,1,2345}, {63817,1,2346}, {63818,1,2347},
    {63819,1,2348}, {63820,1,2349}, {63821,1,2350}, {63822,1,2351}, {63823,1,2352}, {63824,1,2353},
    {63825,1,2354}, {63826,1,2355}, {63827,1,2356}, {63828,1,2357}, {63829,1,2358}, {63830,1,2359},
    {63831,1,2360}, {63832,1,2361}, {63833,1,2362}, {63834,1,2363}, {63835,1,2364}, {63836,1,2365},
    {63837,1,2366}, {63838,1,2367}, {63839,1,2368}, {63840,1,2369}, {63841,1,2370}, {63842,1,2371},
    {63843,1,2372}, {63844,1,2373}, {63845,1,2374}, {63846,1,2375}, {63847,1,2376}, {63848,1,2377},
    {63849,1,2378}, {63850,1,2379}, {63851,1,2380}, {63852,1,2381}, {63853,1,2382}, {63854,1,2383},
    {63855,1,2384}, {63856,1,2385}, {63857,1,2386}, {63858,1,2387}, {63859,1,2388}, {63860,1,2389},
    {63861,1,2390}, {63862,1,2391}, {63863,1,2392}, {63864,1,2393}, {63865,1,2394}, {63866,1,2395},
    {63867,1,2396}, {63868,1,2397}, {63869,1,2398}, {63870,1,2399}, {63871,1,2400}, {63872,1,2401},
    {63873,1,2402}, {63874,1,2403}, {63875,1,2404}, {63876,1,2405}, {63877,1,2406}, {63878,1,2407},
    {63879,1,2408}, {63880,1,2409}, {63881,1,2410}, {63882,1,2411}, {63883,1,2412}, {63884,1,2413},
    {63885,1,2414}, {63886,1,2415}, {63887,1,2416}, {63888,1,2417}, {63889,1,2418}, {63890,1,2419},
    {63891,1,2420}, {63892,1,2421}, {63893,1,2422}, {63894,1,2423}, {63895,1,2424}, {63896,1,2425},
    {63897,1,2426}, {63898,1,2427}, {63899,1,2428}, {63900,1,2429}, {63901,1,2430}, {63902,1,2431},
    {63903,1,2432}, {63904,1,2433}, {63905,1,2434}, {63906,1,2435}, {63907,1,2436}, {63908,1,2437},
    {63909,1,2438}, {63910,1,2439}, {63911,1,2440}, {63912,1,2441}, {63913,1,2442}, {63914,1,2443},
    {63915,1,2444}, {63916,1,2445}, {63917,1,2446}, {63918,1,2447}, {63919,1,2448}, {63920,1,2449},
    {63921,1,2450}, {63922,1,2451}, {63923,1,2452}, {63924,1,2453}, {63925,1,2454}, {63926,1,2455},
    {63927,1,2456}, {63928,1,2457}, {63929,1,2458}, {63930,1,2459}, {63931,1,2460}, {63932,1,2461},
    {63933,1,2462}, {63934,1,2463}, {63935,1,2464}, {63936,1,2465}, {63937,1,2466}, {63938,1,2467},
    {63939,1,2468}, {63940,1,2469}, {63941,1,2470}, {63942,1,2471}, {63943,1,2472}, {63944,1,2473},
    {63945,1,2474}, {63946,1,2475}, {63947,1,2476}, {63948,1,2477}, {63949,1,2478}, {63950,1,2479},
    {63951,1,2480}, {63952,1,2481}, {63953,1,2482}, {63954,1,2483}, {63955,1,2484}, {63956,1,2485},
    {63957,1,2486}, {63958,1,2487}, {63959,1,2488}, {63960,1,2489}, {63961,1,2490}, {63962,1,2491},
    {63963,1,2492}, {63964,1,2493}, {63965,1,2494}, {63966,1,2495}, {63967,1,2496}, {63968,1,2497},
    {63969,1,2498}, {63970,1,2499}, {63971,1,2500}, {63972,1,2501}, {63973,1,2502}, {63974,1,2503},
    {63975,1,2504}, {63976,1,2505}, {63977,1,2506}, {63978,1,2507}, {63979,1,2508}, {63980,1,2509},
    {63981,1,2510}, {63982,1,2511}, {63983,1,2512}, {63984,1,2513}, {63985,1,2514}, {63986,1,2515},
    {63987,1,2516}, {63988,1,2517}, {63989,1,2518}, {63990,1,2519}, {63991,1,2520}, {63992,1,2521},
    {63993,1,2522}, {63994,1,2523}, {63995,1,2524}, {63996,1,2525}, {63997,1,2526}, {63998,1,2527},
    {63999,1,2528}, {64000,1,2529}, {64001,1,2530}, {64002,1,2531}, {64003,1,2532}, {64004,1,2533},
    {64005,1,2534}, {64006,1,2535}, {64007,1,2536}, {64008,1,2537}, {64009,1,2538}, {64010,1,2539},
    {64011,1,2540}, {64012,1,2541}, {64013,1,2542}, {64016,1,2543}, {64018,1,2544}, {64021,1,2545},
    {64022,1,2546}, {64023,1,2547}, {64024,1,2548}, {64025,1,2549}, {64026,1,2550}, {64027,1,2551},
    {64028,1,2552}, {64029,1,2553}, {64030,1,2554}, {64032,1,2555}, {64034,1,2556}, {64037,1,2557},
    {64038,1,2558}, {64042,1,2559}, {64043,1,2560}, {64044,1,2561}, {64045,1,2562}, {64046,1,2563},
    {64047,1,2564}, {64048,1,2565}, {64049,1,2566}, {64050,1,2567}, {64051,1,2568}, {64052,1,2569},
    {64053,1,2570}, {64054,1,2571}, {64055,1,2572}, {64056,1,2573}, {64057,1,2574}, {64058,1,2575},
    {64059,1,2576}, {64060,1,2577}, {64061,1,2578}, {64062,1,2579}, {64063,1,2580}, {64064,1,2581},
    {64065,1,2582}, {64066,1,2583}, {64067,1,2584}, {64068,1,2585}, {64069,1,2586}, {64070,1,2587},
    {64071,1,2588}, {64072,1,2589}, {64073,1,2590}, {64074,1,2591}, {64075,1,2592}, {64076,1,2593},
    {64077,1,2594}, {64078,1,2595}, {64079,1,2596}, {64080,1,2597}, {64081,1,2598}, {64082,1,2599},
    {64083,1,2600}, {64084,1,2601}, {64085,1,2602}, {64086,1,2603}, {64087,1,2604}, {64088,1,2605},
    {64089,1,2606}, {64090,1,2607}, {64091,1,2608}, {64092,1,2609}, {64093,1,2610}, {64094,1,2611},
    {64095,1,2612}, {64096,1,2613}, {64097,1,2614}, {64098,1,2615}, {64099,1,2616}, {64100,1,2617},
    {64101,1,2618}, {64102,1,2619}, {64103,1,2620}, {64104,1,2621}, {64105,1,2622}, {64106,1,2623},
    {64107,1,2624}, {64108,1,2625}, {64109,1,2626}, {64112,1,2627}, {64113,1,2628}, {64114,1,2629},
    {64115,1,2630}, {64116,1,2631}, {64117,1,2632}, {64118,1,2633}, {64119,1,2634}, {64120,1,2635},
    {64121,1,2636}, {64122,1,2637}, {64123,1,2638}, {64124,1,2639}, {64125,1,2640}, {64126,1,2641},
    {64127,1,2642}, {64128,1,2643}, {64129,1,2644}, {64130,1,2645}, {64131,1,2646}, {64132,1,2647},
    {64133,1,2648}, {64134,1,2649}, {64135,1,2650}, {64136,1,2651}, {64137,1,2652}, {64138,1,2653},
    {64139,1,2654}, {64140,1,2655}, {64141,1,2656}, {64142,1,2657}, {64143,1,2658}, {64144,1,2659},
    {64145,1,2660}, {64146,1,2661}, {64147,1,2662}, {64148,1,2663}, {64149,1,2664}, {64150,1,2665},
    {64151,1,2666}, {64152,1,2667}, {64153,1,2668}, {64154,1,2669}, {64155,1,2670}, {64156,1,2671},
    {64157,1,2672}, {64158,1,2673}, {64159,1,2674}, {64160,1,2675}, {64161,1,2676}, {64162,1,2677},
    {64163,1,2678}, {64164,1,2679}, {64165,1,2680}, {64166,1,2681}, {64167,1,2682}, {64168,1,2683},
    {64169,1,2684}, {64170,1,2685}, {64171,1,2686}, {64172,1,2687}, {64173,1,2688}, {64174,1,2689},
    {64175,1,2690}, {64176,1,2691}, {64177,1,2692}, {64178,1,2693}, {64179,1,2694}, {64180,1,2695},
    {64181,1,2696}, {64182,1,2697}, {64183,1,2698}, {64184,1,2699}, {64185,1,2700}, {64186,1,2701},
    {64187,1,2702}, {64188,1,2703}, {64189,1,2704}, {64190,1,2705}, {64191,1,2706}, {64192,1,2707},
    {64193,1,2708}, {64194,1,2709}, {64195,1,2710}, {64196,1,2711}, {64197,1,2712}, {64198,1,2713},
    {64199,1,2714}, {64200,1,2715}, {64201,1,2716}, {64202,1,2717}, {64203,1,2718}, {64204,1,2719},
    {64205,1,2720}, {64206,1,2721}, {64207,1,2722}, {64208,1,2723}, {64209,1,2724}, {64210,1,2725},
    {64211,1,2726}, {64212,1,2727}, {64213,1,2728}, {64214,1,2729}, {64215,1,2730}, {64216,1,2731},
    {64217,1,2732}, {64285,2,2733}, {64287,2,2735}, {64298,2,2737}, {64299,2,2739}, {64300,3,2741},
    {64301,3,2744}, {64302,2,2747}, {64303,2,2749}, {64304,2,2751}, {64305,2,2753}, {64306,2,2755},
    {64307,2,2757}, {64308,2,2759}, {64309,2,2761}, {64310,2,2763}, {64312,2,2765}, {64313,2,2767},
    {64314,2,2769}, {64315,2,2771}, {64316,2,2773}, {64318,2,2775}, {64320,2,2777}, {64321,2,2779},
    {64323,2,2781}, {64324,2,2783}, {64326,2,2785}, {64327,2,2787}, {64328,2,2789}, {64329,2,2791},
    {64330,2,2793}, {64331,2,2795}, {64332,2,2797}, {64333,2,2799}, {64334,2,2801}, {69786,2,2803},
    {69788,2,2805}, {69803,2,2807}, {69934,2,2809}, {69935,2,2811}, {70475,2,2813}, {70476,2,2815},
    {70843,2,2817}, {70844,2,2819}, {70846,2,2821}, {71098,2,2823}, {71099,2,2825}, {71992,2,2827},
    {119134,2,2829}, {119135,2,2831}, {119136,3,2833}, {119137,3,2836}, {119138,3,2839}, {119139,3,2842},
    {119140,3,2845}, {119227,2,2848}, {119228,2,2850}, {119229,3,2852}, {119230,3,2855}, {119231,3,2858},
    {119232,3,2861}, {194560,1,2864}, {194561,1,2865}, {194562,1,2866}, {194563,1,2867}, {194564,1,2868},
    {194565,1,2869}, {194566,1,2870}, {194567,1,2871}, {194568,1,2872}, {194569,1,2873}, {194570,1,2874},
    {194571,1,2875}, {194572,1,2876}, {194573,1,2877}, {194574,1,2878}, {194575,1,2879}, {194576,1,2880},
    {194577,1,2881}, {194578,1,2882}, {194579,1,2883}, {194580,1,2884}, {194581,1,2885}, {194582,1,2886},
    {194583,1,2887}, {194584,1,2888}, {194585,1,2889}, {194586,1,2890}, {194587,1,2891}, {194588,1,2892},
    {194589,1,2893}, {194590,1,2894}, {194591,1,2895}, {194592,1,2896}, {194593,1,2897}, {194594,1,2898},
    {194595,1,2899}, {194596,1,2900}, {194597,1,2901}, {194598,1,2902}, {194599,1,2903}, {194600,1,2904},
    {194601,1,2905}, {194602,1,2906}, {194603,1,2907}, {194604,1,2908}, {194605,1,2909}, {194606,1,2910},
    {194607,1,2911}, {194608,1,2912}, {194609,1,2913}, {194610,1,2914}, {194611,1,2915}, {194612,1,2916},
    {194613,1,2917}, {194614,1,2918}, {194615,1,2919}, {194616,1,2920}, {194617,1,2921}, {194618,1,2922},
    {194619,1,2923}, {194620,1,2924}, {194621,1,2925}, {194622,1,2926}, {194623,1,2927}, {194624,1,2928},
    {194625,1,2929}, {194626,1,2930}, {194627,1,2931}, {194628,1,2932}, {194629,1,2933}, {194630,1,2934},
    {194631,1,2935}, {194632,1,2936}, {194633,1,2937}, {194634,1,2938}, {194635,1,2939}, {194636,1,2940},
    {194637,1,2941}, {194638,1,2942}, {194639,1,2943}, {194640,1,2944}, {194641,1,2945}, {194642,1,2946},
    {194643,1,2947}, {194644,1,2948}, {194645,1,2949}, {194646,1,2950}, {194647,1,2951}, {194648,1,2952},
    {194649,1,2953}, {194650,1,2954}, {194651,1,2955}, {194652,1,2956}, {194653,1,2957}, {194654,1,2958},
    {194655,1,2959}, {194656,1,2960}, {194657,1,2961}, {194658,1,2962}, {194659,1,2963}, {194660,1,2964},
    {194661,1,2965}, {194662,1,2966}, {194663,1,2967}, {194664,1,2968}, {194665,1,2969}, {194666,1,2970},
    {194667,1,2971}, {194668,1,2972}, {194669,1,2973}, {194670,1,2974}, {194671,1,2975}, {194672,1,2976},
    {194673,1,2977}, {194674,1,2978}, {194675,1,2979}, {194676,1,2980}, {194677,1,2981}, {194678,1,2982},
    {194679,1,2983}, {194680,1,2984}, {194681,1,2985}, {194682,1,2986}, {194683,1,2987}, {194684,1,2988},
    {194685,1,2989}, {194686,1,2990}, {194687,1,2991}, {194688,1,2992}, {194689,1,2993}, {194690,1,2994},
    {194691,1,2995}, {194692,1,2996}, {194693,1,2997}, {194694,1,2998}, {194695,1,2999}, {194696,1,3000},
    {194697,1,3001}, {194698,1,3002}, {194699,1,3003}, {194700,1,3004}, {194701,1,3005}, {194702,1,3006},
    {194703,1,3007}, {194704,1,3008}, {194705,1,3009}, {194706,1,3010}, {194707,1,3011}, {194708,1,3012},
    {194709,1,3013}, {194710,1,3014}, {194711,1,3015}, {194712,1,3016}, {194713,1,3017}, {194714,1,3018},
    {194715,1,3019}, {194716,1,3020}, {194717,1,3021}, {194718,1,3022}, {194719,1,3023}, {194720,1,3024},
    {194721,1,3025}, {194722,1,3026}, {194723,1,3027}, {194724,1,3028}, {194725,1,3029}, {194726,1,3030},
    {194727,1,3031}, {194728,1,3032}, {194729,1,3033}, {194730,1,3034}, {194731,1,3035}, {194732,1,3036},
    {194733,1,3037}, {194734,1,3038}, {194735,1,3039}, {194736,1,3040}, {194737,1,3041}, {194738,1,3042},
    {194739,1,3043}, {194740,1,3044}, {194741,1,3045}, {194742,1,3046}, {194743,1,3047}, {194744,1,3048},
    {194745,1,3049}, {194746,1,3050}, {194747,1,3051}, {194748,1,3052}, {194749,1,3053}, {194750,1,3054},
    {194751,1,3055}, {194752,1,3056}, {194753,1,3057}, {194754,1,3058}, {194755,1,3059}, {194756,1,3060},
    {194757,1,3061}, {194758,1,3062}, {194759,1,3063}, {194760,1,3064}, {194761,1,3065}, {194762,1,3066},
    {194763,1,3067}, {194764,1,3068}, {194765,1,3069}, {194766,1,3070}, {194767,1,3071}, {194768,1,3072},
    {194769,1,3073}, {194770,1,3074}, {194771,1,3075}, {194772,1,3076}, {194773,1,3077}, {194774,1,3078},
    {194775,1,3079}, {194776,1,3080}, {194777,1,3081}, {194778,1,3082}, {194779,1,3083}, {194780,1,3084},
    {194781,1,3085}, {194782,1,3086}, {194783,1,3087}, {194784,1,3088}, {194785,1,3089}, {194786,1,3090},
    {194787,1,3091}, {194788,1,3092}, {194789,1,3093}, {194790,1,3094}, {194791,1,3095}, {194792,1,3096},
    {194793,1,3097}, {194794,1,3098}, {194795,1,3099}, {194796,1,3100}, {194797,1,3101}, {194798,1,3102},
    {194799,1,3103}, {194800,1,3104}, {194801,1,3105}, {194802,1,3106}, {194803,1,3107}, {194804,1,3108},
    {194805,1,3109}, {194806,1,3110}, {194807,1,3111}, {194808,1,3112}, {194809,1,3113}, {194810,1,3114},
    {194811,1,3115}, {194812,1,3116}, {194813,1,3117}, {194814,1,3118}, {194815,1,3119}, {194816,1,3120},
    {194817,1,3121}, {194818,1,3122}, {194819,1,3123}, {194820,1,3124}, {194821,1,3125}, {194822,1,3126},
    {194823,1,3127}, {194824,1,3128}, {194825,1,3129}, {194826,1,3130}, {194827,1,3131}, {194828,1,3132},
    {194829,1,3133}, {194830,1,3134}, {194831,1,3135}, {194832,1,3136}, {194833,1,3137}, {194834,1,3138},
    {194835,1,3139}, {194836,1,3140}, {194837,1,3141}, {194838,1,3142}, {194839,1,3143}, {194840,1,3144},
    {194841,1,3145}, {194842,1,3146}, {194843,1,3147}, {194844,1,3148}, {194845,1,3149}, {194846,1,3150},
    {194847,1,3151}, {194848,1,3152}, {194849,1,3153}, {194850,1,3154}, {194851,1,3155}, {194852,1,3156},
    {194853,1,3157}, {194854,1,3158}, {194855,1,3159}, {194856,1,3160}, {194857,1,3161}, {194858,1,3162},
    {194859,1,3163}, {194860,1,3164}, {194861,1,3165}, {194862,1,3166}, {194863,1,3167}, {194864,1,3168},
    {194865,1,3169}, {194866,1,3170}, {194867,1,3171}, {194868,1,3172}, {194869,1,3173}, {194870,1,3174},
    {194871,1,3175}, {194872,1,3176}, {194873,1,3177}, {194874,1,3178}, {194875,1,3179}, {194876,1,3180},
    {194877,1,3181}, {194878,1,3182}, {194879,1,3183}, {194880,1,3184}, {194881,1,3185}, {194882,1,3186},
    {194883,1,3187}, {194884,1,3188}, {194885,1,3189}, {194886,1,3190}, {194887,1,3191}, {194888,1,3192},
    {194889,1,3193}, {194890,1,3194}, {194891,1,3195}, {194892,1,3196}, {194893,1,3197}, {194894,1,3198},
    {194895,1,3199}, {194896,1,3200}, {194897,1,3201}, {194898,1,3202}, {194899,1,3203}, {194900,1,3204},
    {194901,1,3205}, {194902,1,3206}, {194903,1,3207}, {194904,1,3208}, {194905,1,3209}, {194906,1,3210},
    {194907,1,3211}, {194908,1,3212}, {194909,1,3213}, {194910,1,3214}, {194911,1,3215}, {194912,1,3216},
    {194913,1,3217}, {194914,1,3218}, {194915,1,3219}, {194916,1,3220}, {194917,1,3221}, {194918,1,3222},
    {194919,1,3223}, {194920,1,3224}, {194921,1,3225}, {194922,1,3226}, {194923,1,3227}, {194924,1,3228},
    {194925,1,3229}, {194926,1,3230}, {194927,1,3231}, {194928,1,3232}, {194929,1,3233}, {194930,1,3234},
    {194931,1,3235}, {194932,1,3236}, {194933,1,3237}, {194934,1,3238}, {194935,1,3239}, {194936,1,3240},
    {194937,1,3241}, {194938,1,3242}, {194939,1,3243}, {194940,1,3244}, {194941,1,3245}, {194942,1,3246},
    {194943,1,3247}, {194944,1,3248}, {194945,1,3249}, {194946,1,3250}, {194947,1,3251}, {194948,1,3252},
    {194949,1,3253}, {194950,1,3254}, {194951,1,3255}, {194952,1,3256}, {194953,1,3257}, {194954,1,3258},
    {194955,1,3259}, {194956,1,3260}, {194957,1,3261}, {194958,1,3262}, {194959,1,3263}, {194960,1,3264},
    {194961,1,3265}, {194962,1,3266}, {194963,1,3267}, {194964,1,3268}, {194965,1,3269}, {194966,1,3270},
    {194967,1,3271}, {194968,1,3272}, {194969,1,3273}, {194970,1,3274}, {194971,1,3275}, {194972,1,3276},
    {194973,1,3277}, {194974,1,3278}, {194975,1,3279}, {194976,1,3280}, {194977,1,3281}, {194978,1,3282},
    {194979,1,3283}, {194980,1,3284}, {194981,1,3285}, {194982,1,3286}, {194983,1,3287}, {194984,1,3288},
    {194985,1,3289}, {194986,1,3290}, {194987,1,3291}, {194988,1,3292}, {194989,1,3293}, {194990,1,3294},
    {194991,1,3295}, {194992,1,3296}, {194993,1,3297}, {194994,1,3298}, {194995,1,3299}, {194996,1,3300},
    {194997,1,3301}, {194998,1,3302}, {194999,1,3303}, {195000,1,3304}, {195001,1,3305}, {195002,1,3306},
    {195003,1,3307}, {195004,1,3308}, {195005,1,3309}, {195006,1,3310}, {195007,1,3311}, {195008,1,3312},
    {195009,1,3313}, {195010,1,3314}, {195011,1,3315}, {195012,1,3316}, {195013,1,3317}, {195014,1,3318},
    {195015,1,3319}, {195016,1,3320}, {195017,1,3321}, {195018,1,3322}, {195019,1,3323}, {195020,1,3324},
    {195021,1,3325}, {195022,1,3326}, {195023,1,3327}, {195024,1,3328}, {195025,1,3329}, {195026,1,3330},
    {195027,1,3331}, {195028,1,3332}, {195029,1,3333}, {195030,1,3334}, {195031,1,3335}, {195032,1,3336},
    {195033,1,3337}, {195034,1,3338}, {195035,1,3339}, {195036,1,3340}, {195037,1,3341}, {195038,1,3342},
    {195039,1,3343}, {195040,1,3344}, {195041,1,3345}, {195042,1,3346}, {195043,1,3347}, {195044,1,3348},
    {195045,1,3349}, {195046,1,3350}, {195047,1,3351}, {195048,1,3352}, {195049,1,3353}, {195050,1,3354},
    {195051,1,3355}, {195052,1,3356}, {195053,1,3357}, {195054,1,3358}, {195055,1,3359}, {195056,1,3360},
    {195057,1,3361}, {195058,1,3362}, {195059,1,3363}, {195060,1,3364}, {195061,1,3365}, {195062,1,3366},
    {195063,1,3367}, {195064,1,3368}, {195065,1,3369}, {195066,1,3370}, {195067,1,3371}, {195068,1,3372},
    {195069,1,3373}, {195070,1,3374}, {195071,1,3375}, {195072,1,3376}, {195073,1,3377}, {195074,1,3378},
    {195075,1,3379}, {195076,1,3380}, {195077,1,3381}, {195078,1,3382}, {195079,1,3383}, {195080,1,3384},
    {195081,1,3385}, {195082,1,3386}, {195083,1,3387}, {195084,1,3388}, {195085,1,3389}, {195086,1,3390},
    {195087,1,3391}, {195088,1,3392}, {195089,1,3393}, {195090,1,3394}, {195091,1,3395}, {195092,1,3396},
    {195093,1,3397}, {195094,1,3398}, {195095,1,3399}, {195096,1,3400}, {195097,1,3401}, {195098,1,3402},
    {195099,1,3403}, {195100,1,3404}, {195101,1,3405},
};
const std::size_t kDecompRowCount = 2061;
const char32_t kDecompPool[] = {
    65, 768, 65, 769, 65, 770, 65, 771, 65, 776, 65, 778,
    67, 807, 69, 768, 69, 769, 69, 770, 69, 776, 73, 768,
    73, 769, 73, 770, 73, 776, 78, 771, 79, 768, 79, 769,
    79, 770, 79, 771, 79, 776, 85, 768, 85, 769, 85, 770,
    85, 776, 89, 769, 97, 768, 97, 769, 97, 770, 97, 771,
    97, 776, 97, 778, 99, 807, 101, 768, 101, 769, 101, 770,
    101, 776, 105, 768, 105, 769, 105, 770, 105, 776, 110, 771,
    111, 768, 111, 769, 111, 770, 111, 771, 111, 776, 117, 768,
    117, 769, 117, 770, 117, 776, 121, 769, 121, 776, 65, 772,
    97, 772, 65, 774, 97, 774, 65, 808, 97, 808, 67, 769,
    99, 769, 67, 770, 99, 770, 67, 775, 99, 775, 67, 780,
    99, 780, 68, 780, 100, 780, 69, 772, 101, 772, 69, 774,
    101, 774, 69, 775, 101, 775, 69, 808, 101, 808, 69, 780,
    101, 780, 71, 770, 103, 770, 71, 774, 103, 774, 71, 775,
    103, 775, 71, 807, 103, 807, 72, 770, 104, 770, 73, 771,
    105, 771, 73, 772, 105, 772, 73, 774, 105, 774, 73, 808,
    105, 808, 73, 775, 74, 770, 106, 770, 75, 807, 107, 807,
    76, 769, 108, 769, 76, 807, 108, 807, 76, 780, 108, 780,
    78, 769, 110, 769, 78, 807, 110, 807, 78, 780, 110, 780,
    79, 772, 111, 772, 79, 774, 111, 774, 79, 779, 111, 779,
    82, 769, 114, 769, 82, 807, 114, 807, 82, 780, 114, 780,
    83, 769, 115, 769, 83, 770, 115, 770, 83, 807, 115, 807,
    83, 780, 115, 780, 84, 807, 116, 807, 84, 780, 116, 780,
    85, 771, 117, 771, 85, 772, 117, 772, 85, 774, 117, 774,
    85, 778, 117, 778, 85, 779, 117, 779, 85, 808, 117, 808,
    87, 770, 119, 770, 89, 770, 121, 770, 89, 776, 90, 769,
    122, 769, 90, 775, 122, 775, 90, 780, 122, 780, 79, 795,
    111, 795, 85, 795, 117, 795, 65, 780, 97, 780, 73, 780,
    105, 780, 79, 780, 111, 780, 85, 780, 117, 780, 85, 776,
    772, 117, 776, 772, 85, 776, 769, 117, 776, 769, 85, 776,
    780, 117, 776, 780, 85, 776, 768, 117, 776, 768, 65, 776,
    772, 97, 776, 772, 65, 775, 772, 97, 775, 772, 198, 772,
    230, 772, 71, 780, 103, 780, 75, 780, 107, 780, 79, 808,
    111, 808, 79, 808, 772, 111, 808, 772, 439, 780, 658, 780,
    106, 780, 71, 769, 103, 769, 78, 768, 110, 768, 65, 778,
    769, 97, 778, 769, 198, 769, 230, 769, 216, 769, 248, 769,
    65, 783, 97, 783, 65, 785, 97, 785, 69, 783, 101, 783,
    69, 785, 101, 785, 73, 783, 105, 783, 73, 785, 105, 785,
    79, 783, 111, 783, 79, 785, 111, 785, 82, 783, 114, 783,
    82, 785, 114, 785, 85, 783, 117, 783, 85, 785, 117, 785,
    83, 806, 115, 806, 84, 806, 116, 806, 72, 780, 104, 780,
    65, 775, 97, 775, 69, 807, 101, 807, 79, 776, 772, 111,
    776, 772, 79, 771, 772, 111, 771, 772, 79, 775, 111, 775,
    79, 775, 772, 111, 775, 772, 89, 772, 121, 772, 768, 769,
    787, 776, 769, 697, 59, 168, 769, 913, 769, 183, 917, 769,
    919, 769, 921, 769, 927, 769, 933, 769, 937, 769, 953, 776,
    769, 921, 776, 933, 776, 945, 769, 949, 769, 951, 769, 953,
    769, 965, 776, 769, 953, 776, 965, 776, 959, 769, 965, 769,
    969, 769, 978, 769, 978, 776, 1045, 768, 1045, 776, 1043, 769,
    1030, 776, 1050, 769, 1048, 768, 1059, 774, 1048, 774, 1080, 774,
    1077, 768, 1077, 776, 1075, 769, 1110, 776, 1082, 769, 1080, 768,
    1091, 774, 1140, 783, 1141, 783, 1046, 774, 1078, 774, 1040, 774,
    1072, 774, 1040, 776, 1072, 776, 1045, 774, 1077, 774, 1240, 776,
    1241, 776, 1046, 776, 1078, 776, 1047, 776, 1079, 776, 1048, 772,
    1080, 772, 1048, 776, 1080, 776, 1054, 776, 1086, 776, 1256, 776,
    1257, 776, 1069, 776, 1101, 776, 1059, 772, 1091, 772, 1059, 776,
    1091, 776, 1059, 779, 1091, 779, 1063, 776, 1095, 776, 1067, 776,
    1099, 776, 1575, 1619, 1575, 1620, 1608, 1620, 1575, 1621, 1610, 1620,
    1749, 1620, 1729, 1620, 1746, 1620, 2344, 2364, 2352, 2364, 2355, 2364,
    2325, 2364, 2326, 2364, 2327, 2364, 2332, 2364, 2337, 2364, 2338, 2364,
    2347, 2364, 2351, 2364, 2503, 2494, 2503, 2519, 2465, 2492, 2466, 2492,
    2479, 2492, 2610, 2620, 2616, 2620, 2582, 2620, 2583, 2620, 2588, 2620,
    2603, 2620, 2887, 2902, 2887, 2878, 2887, 2903, 2849, 2876, 2850, 2876,
    2962, 3031, 3014, 3006, 3015, 3006, 3014, 3031, 3142, 3158, 3263, 3285,
    3270, 3285, 3270, 3286, 3270, 3266, 3270, 3266, 3285, 3398, 3390, 3399,
    3390, 3398, 3415, 3545, 3530, 3545, 3535, 3545, 3535, 3530, 3545, 3551,
    3906, 4023, 3916, 4023, 3921, 4023, 3926, 4023, 3931, 4023, 3904, 4021,
    3953, 3954, 3953, 3956, 4018, 3968, 4019, 3968, 3953, 3968, 3986, 4023,
    3996, 4023, 4001, 4023, 4006, 4023, 4011, 4023, 3984, 4021, 4133, 4142,
    6917, 6965, 6919, 6965, 6921, 6965, 6923, 6965, 6925, 6965, 6929, 6965,
    6970, 6965, 6972, 6965, 6974, 6965, 6975, 6965, 6978, 6965, 65, 805,
    97, 805, 66, 775, 98, 775, 66, 803, 98, 803, 66, 817,
    98, 817, 67, 807, 769, 99, 807, 769, 68, 775, 100, 775,
    68, 803, 100, 803, 68, 817, 100, 817, 68, 807, 100, 807,
    68, 813, 100, 813, 69, 772, 768, 101, 772, 768, 69, 772,
    769, 101, 772, 769, 69, 813, 101, 813, 69, 816, 101, 816,
    69, 807, 774, 101, 807, 774, 70, 775, 102, 775, 71, 772,
    103, 772, 72, 775, 104, 775, 72, 803, 104, 803, 72, 776,
    104, 776, 72, 807, 104, 807, 72, 814, 104, 814, 73, 816,
    105, 816, 73, 776, 769, 105, 776, 769, 75, 769, 107, 769,
    75, 803, 107, 803, 75, 817, 107, 817, 76, 803, 108, 803,
    76, 803, 772, 108, 803, 772, 76, 817, 108, 817, 76, 813,
    108, 813, 77, 769, 109, 769, 77, 775, 109, 775, 77, 803,
    109, 803, 78, 775, 110, 775, 78, 803, 110, 803, 78, 817,
    110, 817, 78, 813, 110, 813, 79, 771, 769, 111, 771, 769,
    79, 771, 776, 111, 771, 776, 79, 772, 768, 111, 772, 768,
    79, 772, 769, 111, 772, 769, 80, 769, 112, 769, 80, 775,
    112, 775, 82, 775, 114, 775, 82, 803, 114, 803, 82, 803,
    772, 114, 803, 772, 82, 817, 114, 817, 83, 775, 115, 775,
    83, 803, 115, 803, 83, 769, 775, 115, 769, 775, 83, 780,
    775, 115, 780, 775, 83, 803, 775, 115, 803, 775, 84, 775,
    116, 775, 84, 803, 116, 803, 84, 817, 116, 817, 84, 813,
    116, 813, 85, 804, 117, 804, 85, 816, 117, 816, 85, 813,
    117, 813, 85, 771, 769, 117, 771, 769, 85, 772, 776, 117,
    772, 776, 86, 771, 118, 771, 86, 803, 118, 803, 87, 768,
    119, 768, 87, 769, 119, 769, 87, 776, 119, 776, 87, 775,
    119, 775, 87, 803, 119, 803, 88, 775, 120, 775, 88, 776,
    120, 776, 89, 775, 121, 775, 90, 770, 122, 770, 90, 803,
    122, 803, 90, 817, 122, 817, 104, 817, 116, 776, 119, 778,
    121, 778, 383, 775, 65, 803, 97, 803, 65, 777, 97, 777,
    65, 770, 769, 97, 770, 769, 65, 770, 768, 97, 770, 768,
    65, 770, 777, 97, 770, 777, 65, 770, 771, 97, 770, 771,
    65, 803, 770, 97, 803, 770, 65, 774, 769, 97, 774, 769,
    65, 774, 768, 97, 774, 768, 65, 774, 777, 97, 774, 777,
    65, 774, 771, 97, 774, 771, 65, 803, 774, 97, 803, 774,
    69, 803, 101, 803, 69, 777, 101, 777, 69, 771, 101, 771,
    69, 770, 769, 101, 770, 769, 69, 770, 768, 101, 770, 768,
    69, 770, 777, 101, 770, 777, 69, 770, 771, 101, 770, 771,
    69, 803, 770, 101, 803, 770, 73, 777, 105, 777, 73, 803,
    105, 803, 79, 803, 111, 803, 79, 777, 111, 777, 79, 770,
    769, 111, 770, 769, 79, 770, 768, 111, 770, 768, 79, 770,
    777, 111, 770, 777, 79, 770, 771, 111, 770, 771, 79, 803,
    770, 111, 803, 770, 79, 795, 769, 111, 795, 769, 79, 795,
    768, 111, 795, 768, 79, 795, 777, 111, 795, 777, 79, 795,
    771, 111, 795, 771, 79, 795, 803, 111, 795, 803, 85, 803,
    117, 803, 85, 777, 117, 777, 85, 795, 769, 117, 795, 769,
    85, 795, 768, 117, 795, 768, 85, 795, 777, 117, 795, 777,
    85, 795, 771, 117, 795, 771, 85, 795, 803, 117, 795, 803,
    89, 768, 121, 768, 89, 803, 121, 803, 89, 777, 121, 777,
    89, 771, 121, 771, 945, 787, 945, 788, 945, 787, 768, 945,
    788, 768, 945, 787, 769, 945, 788, 769, 945, 787, 834, 945,
    788, 834, 913, 787, 913, 788, 913, 787, 768, 913, 788, 768,
    913, 787, 769, 913, 788, 769, 913, 787, 834, 913, 788, 834,
    949, 787, 949, 788, 949, 787, 768, 949, 788, 768, 949, 787,
    769, 949, 788, 769, 917, 787, 917, 788, 917, 787, 768, 917,
    788, 768, 917, 787, 769, 917, 788, 769, 951, 787, 951, 788,
    951, 787, 768, 951, 788, 768, 951, 787, 769, 951, 788, 769,
    951, 787, 834, 951, 788, 834, 919, 787, 919, 788, 919, 787,
    768, 919, 788, 768, 919, 787, 769, 919, 788, 769, 919, 787,
    834, 919, 788, 834, 953, 787, 953, 788, 953, 787, 768, 953,
    788, 768, 953, 787, 769, 953, 788, 769, 953, 787, 834, 953,
    788, 834, 921, 787, 921, 788, 921, 787, 768, 921, 788, 768,
    921, 787, 769, 921, 788, 769, 921, 787, 834, 921, 788, 834,
    959, 787, 959, 788, 959, 787, 768, 959, 788, 768, 959, 787,
    769, 959, 788, 769, 927, 787, 927, 788, 927, 787, 768, 927,
    788, 768, 927, 787, 769, 927, 788, 769, 965, 787, 965, 788,
    965, 787, 768, 965, 788, 768, 965, 787, 769, 965, 788, 769,
    965, 787, 834, 965, 788, 834, 933, 788, 933, 788, 768, 933,
    788, 769, 933, 788, 834, 969, 787, 969, 788, 969, 787, 768,
    969, 788, 768, 969, 787, 769, 969, 788, 769, 969, 787, 834,
    969, 788, 834, 937, 787, 937, 788, 937, 787, 768, 937, 788,
    768, 937, 787, 769, 937, 788, 769, 937, 787, 834, 937, 788,
    834, 945, 768, 945, 769, 949, 768, 949, 769, 951, 768, 951,
    769, 953, 768, 953, 769, 959, 768, 959, 769, 965, 768, 965,
    769, 969, 768, 969, 769, 945, 787, 837, 945, 788, 837, 945,
    787, 768, 837, 945, 788, 768, 837, 945, 787, 769, 837, 945,
    788, 769, 837, 945, 787, 834, 837, 945, 788, 834, 837, 913,
    787, 837, 913, 788, 837, 913, 787, 768, 837, 913, 788, 768,
    837, 913, 787, 769, 837, 913, 788, 769, 837, 913, 787, 834,
    837, 913, 788, 834, 837, 951, 787, 837, 951, 788, 837, 951,
    787, 768, 837, 951, 788, 768, 837, 951, 787, 769, 837, 951,
    788, 769, 837, 951, 787, 834, 837, 951, 788, 834, 837, 919,
    787, 837, 919, 788, 837, 919, 787, 768, 837, 919, 788, 768,
    837, 919, 787, 769, 837, 919, 788, 769, 837, 919, 787, 834,
    837, 919, 788, 834, 837, 969, 787, 837, 969, 788, 837, 969,
    787, 768, 837, 969, 788, 768, 837, 969, 787, 769, 837, 969,
    788, 769, 837, 969, 787, 834, 837, 969, 788, 834, 837, 937,
    787, 837, 937, 788, 837, 937, 787, 768, 837, 937, 788, 768,
    837, 937, 787, 769, 837, 937, 788, 769, 837, 937, 787, 834,
    837, 937, 788, 834, 837, 945, 774, 945, 772, 945, 768, 837,
    945, 837, 945, 769, 837, 945, 834, 945, 834, 837, 913, 774,
    913, 772, 913, 768, 913, 769, 913, 837, 953, 168, 834, 951,
    768, 837, 951, 837, 951, 769, 837, 951, 834, 951, 834, 837,
    917, 768, 917, 769, 919, 768, 919, 769, 919, 837, 8127, 768,
    8127, 769, 8127, 834, 953, 774, 953, 772, 953, 776, 768, 953,
    776, 769, 953, 834, 953, 776, 834, 921, 774, 921, 772, 921,
    768, 921, 769, 8190, 768, 8190, 769, 8190, 834, 965, 774, 965,
    772, 965, 776, 768, 965, 776, 769, 961, 787, 961, 788, 965,
    834, 965, 776, 834, 933, 774, 933, 772, 933, 768, 933, 769,
    929, 788, 168, 768, 168, 769, 96, 969, 768, 837, 969, 837,
    969, 769, 837, 969, 834, 969, 834, 837, 927, 768, 927, 769,
    937, 768, 937, 769, 937, 837, 180, 8194, 8195, 937, 75, 65,
    778, 8592, 824, 8594, 824, 8596, 824, 8656, 824, 8660, 824, 8658,
    824, 8707, 824, 8712, 824, 8715, 824, 8739, 824, 8741, 824, 8764,
    824, 8771, 824, 8773, 824, 8776, 824, 61, 824, 8801, 824, 8781,
    824, 60, 824, 62, 824, 8804, 824, 8805, 824, 8818, 824, 8819,
    824, 8822, 824, 8823, 824, 8826, 824, 8827, 824, 8834, 824, 8835,
    824, 8838, 824, 8839, 824, 8866, 824, 8872, 824, 8873, 824, 8875,
    824, 8828, 824, 8829, 824, 8849, 824, 8850, 824, 8882, 824, 8883,
    824, 8884, 824, 8885, 824, 12296, 12297, 10973, 824, 12363, 12441, 12365,
    12441, 12367, 12441, 12369, 12441, 12371, 12441, 12373, 12441, 12375, 12441, 12377,
    12441, 12379, 12441, 12381, 12441, 12383, 12441, 12385, 12441, 12388, 12441, 12390,
    12441, 12392, 12441, 12399, 12441, 12399, 12442, 12402, 12441, 12402, 12442, 12405,
    12441, 12405, 12442, 12408, 12441, 12408, 12442, 12411, 12441, 12411, 12442, 12358,
    12441, 12445, 12441, 12459, 12441, 12461, 12441, 12463, 12441, 12465, 12441, 12467,
    12441, 12469, 12441, 12471, 12441, 12473, 12441, 12475, 12441, 12477, 12441, 12479,
    12441, 12481, 12441, 12484, 12441, 12486, 12441, 12488, 12441, 12495, 12441, 12495,
    12442, 12498, 12441, 12498, 12442, 12501, 12441, 12501, 12442, 12504, 12441, 12504,
    12442, 12507, 12441, 12507, 12442, 12454, 12441, 12527, 12441, 12528, 12441, 12529,
    12441, 12530, 12441, 12541, 12441, 35912, 26356, 36554, 36040, 28369, 20018, 21477,
    40860, 40860, 22865, 37329, 21895, 22856, 25078, 30313, 32645, 34367, 34746, 35064,
    37007, 27138, 27931, 28889, 29662, 33853, 37226, 39409, 20098, 21365, 27396, 29211,
    34349, 40478, 23888, 28651, 34253, 35172, 25289, 33240, 34847, 24266, 26391, 28010,
    29436, 37070, 20358, 20919, 21214, 25796, 27347, 29200, 30439, 32769, 34310, 34396,
    36335, 38706, 39791, 40442, 30860, 31103, 32160, 33737, 37636, 40575, 35542, 22751,
    24324, 31840, 32894, 29282, 30922, 36034, 38647, 22744, 23650, 27155, 28122, 28431,
    32047, 32311, 38475, 21202, 32907, 20956, 20940, 31260, 32190, 33777, 38517, 35712,
    25295, 27138, 35582, 20025, 23527, 24594, 29575, 30064, 21271, 30971, 20415, 24489,
    19981, 27852, 25976, 32034, 21443, 22622, 30465, 33865, 35498, 27578, 36784, 27784,
    25342, 33509, 25504, 30053, 20142, 20841, 20937, 26753, 31975, 33391, 35538, 37327,
    21237, 21570, 22899, 24300, 26053, 28670, 31018, 38317, 39530, 40599, 40654, 21147,
    26310, 27511, 36706, 24180, 24976, 25088, 25754, 28451, 29001, 29833, 31178, 32244,
    32879, 36646, 34030, 36899, 37706, 21015, 21155, 21693, 28872, 35010, 35498, 24265,
    24565, 25467, 27566, 31806, 29557, 20196, 22265, 23527, 23994, 24604, 29618, 29801,
    32666, 32838, 37428, 38646, 38728, 38936, 20363, 31150, 37300, 38584, 24801, 20102,
    20698, 23534, 23615, 26009, 27138, 29134, 30274, 34044, 36988, 40845, 26248, 38446,
    21129, 26491, 26611, 27969, 28316, 29705, 30041, 30827, 32016, 39006, 20845, 25134,
    38520, 20523, 23833, 28138, 36650, 24459, 24900, 26647, 29575, 38534, 21033, 21519,
    23653, 26131, 26446, 26792, 27877, 29702, 30178, 32633, 35023, 35041, 37324, 38626,
    21311, 28346, 21533, 29136, 29848, 34298, 38563, 40023, 40607, 26519, 28107, 33256,
    31435, 31520, 31890, 29376, 28825, 35672, 20160, 33590, 21050, 20999, 24230, 25299,
    31958, 23429, 27934, 26292, 36667, 34892, 38477, 35211, 24275, 20800, 21952, 22618,
    26228, 20958, 29482, 30410, 31036, 31070, 31077, 31119, 38742, 31934, 32701, 34322,
    35576, 36920, 37117, 39151, 39164, 39208, 40372, 37086, 38583, 20398, 20711, 20813,
    21193, 21220, 21329, 21917, 22022, 22120, 22592, 22696, 23652, 23662, 24724, 24936,
    24974, 25074, 25935, 26082, 26257, 26757, 28023, 28186, 28450, 29038, 29227, 29730,
    30865, 31038, 31049, 31048, 31056, 31062, 31069, 31117, 31118, 31296, 31361, 31680,
    32244, 32265, 32321, 32626, 32773, 33261, 33401, 33401, 33879, 35088, 35222, 35585,
    35641, 36051, 36104, 36790, 36920, 38627, 38911, 38971, 24693, 148206, 33304, 20006,
    20917, 20840, 20352, 20805, 20864, 21191, 21242, 21917, 21845, 21913, 21986, 22618,
    22707, 22852, 22868, 23138, 23336, 24274, 24281, 24425, 24493, 24792, 24910, 24840,
    24974, 24928, 25074, 25140, 25540, 25628, 25682, 25942, 26228, 26391, 26395, 26454,
    27513, 27578, 27969, 28379, 28363, 28450, 28702, 29038, 30631, 29237, 29359, 29482,
    29809, 29958, 30011, 30237, 30239, 30410, 30427, 30452, 30538, 30528, 30924, 31409,
    31680, 31867, 32091, 32244, 32574, 32773, 33618, 33775, 34681, 35137, 35206, 35222,
    35519, 35576, 35531, 35585, 35582, 35565, 35641, 35722, 36104, 36664, 36978, 37273,
    37494, 38524, 38627, 38742, 38875, 38911, 38923, 38971, 39698, 40860, 141386, 141380,
    144341, 15261, 16408, 16441, 152137, 154832, 163539, 40771, 40846, 1497, 1460, 1522,
    1463, 1513, 1473, 1513, 1474, 1513, 1468, 1473, 1513, 1468, 1474, 1488,
    1463, 1488, 1464, 1488, 1468, 1489, 1468, 1490, 1468, 1491, 1468, 1492,
    1468, 1493, 1468, 1494, 1468, 1496, 1468, 1497, 1468, 1498, 1468, 1499,
    1468, 1500, 1468, 1502, 1468, 1504, 1468, 1505, 1468, 1507, 1468, 1508,
    1468, 1510, 1468, 1511, 1468, 1512, 1468, 1513, 1468, 1514, 1468, 1493,
    1465, 1489, 1471, 1499, 1471, 1508, 1471, 69785, 69818, 69787, 69818, 69797,
    69818, 69937, 69927, 69938, 69927, 70471, 70462, 70471, 70487, 70841, 70842, 70841,
    70832, 70841, 70845, 71096, 71087, 71097, 71087, 71989, 71984, 119127, 119141, 119128,
    119141, 119128, 119141, 119150, 119128, 119141, 119151, 119128, 119141, 119152, 119128, 119141,
    119153, 119128, 119141, 119154, 119225, 119141, 119226, 119141, 119225, 119141, 119150, 119226,
    119141, 119150, 119225, 119141, 119151, 119226, 119141, 119151, 20029, 20024, 20033, 131362,
    20320, 20398, 20411, 20482, 20602, 20633, 20711, 20687, 13470, 132666, 20813, 20820,
    20836, 20855, 132380, 13497, 20839, 20877, 132427, 20887, 20900, 20172, 20908, 20917,
    168415, 20981, 20995, 13535, 21051, 21062, 21106, 21111, 13589, 21191, 21193, 21220,
    21242, 21253, 21254, 21271, 21321, 21329, 21338, 21363, 21373, 21375, 21375, 21375,
    133676, 28784, 21450, 21471, 133987, 21483, 21489, 21510, 21662, 21560, 21576, 21608,
    21666, 21750, 21776, 21843, 21859, 21892, 21892, 21913, 21931, 21939, 21954, 22294,
    22022, 22295, 22097, 22132, 20999, 22766, 22478, 22516, 22541, 22411, 22578, 22577,
    22700, 136420, 22770, 22775, 22790, 22810, 22818, 22882, 136872, 136938, 23020, 23067,
    23079, 23000, 23142, 14062, 14076, 23304, 23358, 23358, 137672, 23491, 23512, 23527,
    23539, 138008, 23551, 23558, 24403, 23586, 14209, 23648, 23662, 23744, 23693, 138724,
    23875, 138726, 23918, 23915, 23932, 24033, 24034, 14383, 24061, 24104, 24125, 24169,
    14434, 139651, 14460, 24240, 24243, 24246, 24266, 172946, 24318, 140081, 140081, 33281,
    24354, 24354, 14535, 144056, 156122, 24418, 24427, 14563, 24474, 24525, 24535, 24569,
    24705, 14650, 14620, 24724, 141012, 24775, 24904, 24908, 24910, 24908, 24954, 24974,
    25010, 24996, 25007, 25054, 25074, 25078, 25104, 25115, 25181, 25265, 25300, 25424,
    142092, 25405, 25340, 25448, 25475, 25572, 142321, 25634, 25541, 25513, 14894, 25705,
    25726, 25757, 25719, 14956, 25935, 25964, 143370, 26083, 26360, 26185, 15129, 26257,
    15112, 15076, 20882, 20885, 26368, 26268, 32941, 17369, 26391, 26395, 26401, 26462,
    26451, 144323, 15177, 26618, 26501, 26706, 26757, 144493, 26766, 26655, 26900, 15261,
    26946, 27043, 27114, 27304, 145059, 27355, 15384, 27425, 145575, 27476, 15438, 27506,
    27551, 27578, 27579, 146061, 138507, 146170, 27726, 146620, 27839, 27853, 27751, 27926,
    27966, 28023, 27969, 28009, 28024, 28037, 146718, 27956, 28207, 28270, 15667, 28363,
    28359, 147153, 28153, 28526, 147294, 147342, 28614, 28729, 28702, 28699, 15766, 28746,
    28797, 28791, 28845, 132389, 28997, 148067, 29084, 148395, 29224, 29237, 29264, 149000,
    29312, 29333, 149301, 149524, 29562, 29579, 16044, 29605, 16056, 16056, 29767, 29788,
    29809, 29829, 29898, 16155, 29988, 150582, 30014, 150674, 30064, 139679, 30224, 151457,
    151480, 151620, 16380, 16392, 30452, 151795, 151794, 151833, 151859, 30494, 30495, 30495,
    30538, 16441, 30603, 16454, 16534, 152605, 30798, 30860, 30924, 16611, 153126, 31062,
    153242, 153285, 31119, 31211, 16687, 31296, 31306, 31311, 153980, 154279, 154279, 31470,
    16898, 154539, 31686, 31689, 16935, 154752, 31954, 17056, 31976, 31971, 32000, 155526,
    32099, 17153, 32199, 32258, 32325, 17204, 156200, 156231, 17241, 156377, 32634, 156478,
    32661, 32762, 32773, 156890, 156963, 32864, 157096, 32880, 144223, 17365, 32946, 33027,
    17419, 33086, 23221, 157607, 157621, 144275, 144284, 33281, 33284, 36766, 17515, 33425,
    33419, 33437, 21171, 33457, 33459, 33469, 33510, 158524, 33509, 33565, 33635, 33709,
    33571, 33725, 33767, 33879, 33619, 33738, 33740, 33756, 158774, 159083, 158933, 17707,
    34033, 34035, 34070, 160714, 34148, 159532, 17757, 17761, 159665, 159954, 17771, 34384,
    34396, 34407, 34409, 34473, 34440, 34574, 34530, 34681, 34600, 34667, 34694, 17879,
    34785, 34817, 17913, 34912, 34915, 161383, 35031, 35038, 17973, 35066, 13499, 161966,
    162150, 18110, 18119, 35488, 35565, 35722, 35925, 162984, 36011, 36033, 36123, 36215,
    163631, 133124, 36299, 36284, 36336, 133342, 36564, 36664, 165330, 165357, 37012, 37105,
    37137, 165678, 37147, 37432, 37591, 37592, 37500, 37881, 37909, 166906, 38283, 18837,
    38327, 167287, 18918, 38595, 23986, 38691, 168261, 168474, 19054, 19062, 38880, 168970,
    19122, 169110, 38923, 38923, 38953, 169398, 39138, 19251, 39209, 39335, 39362, 39422,
    19406, 170800, 39698, 40000, 40189, 19662, 19693, 40295, 172238, 19704, 172293, 172558,
    172689, 40635, 19798, 40697, 40702, 40709, 40719, 40726, 40763, 173568,
};

const CccRow kCccRows[] = {
    {768,230}, {769,230}, {770,230}, {771,230}, {772,230}, {773,230}, {774,230}, {775,230},
    {776,230}, {777,230}, {778,230}, {779,230}, {780,230}, {781,230}, {782,230}, {783,230},
    {784,230}, {785,230}, {786,230}, {787,230}, {788,230}, {789,232}, {790,220}, {791,220},
    {792,220}, {793,220}, {794,232}, {795,216}, {796,220}, {797,220}, {798,220}, {799,220},
    {800,220}, {801,202}, {802,202}, {803,220}, {804,220}, {805,220}, {806,220}, {807,202},
    {808,202}, {809,220}, {810,220}, {811,220}, {812,220}, {813,220}, {814,220}, {815,220},
    {816,220}, {817,220}, {818,220}, {819,220}, {820,1}, {821,1}, {822,1}, {823,1},
    {824,1}, {825,220}, {826,220}, {827,220}, {828,220}, {829,230}, {830,230}, {831,230},
    {832,230}, {833,230}, {834,230}, {835,230}, {836,230}, {837,240}, {838,230}, {839,220},
    {840,220}, {841,220}, {842,230}, {843,230}, {844,230}, {845,220}, {846,220}, {848,230},
    {849,230}, {850,230}, {851,220}, {852,220}, {853,220}, {854,220}, {855,230}, {856,232},
    {857,220}, {858,220}, {859,230}, {860,233}, {861,234}, {862,234}, {863,233}, {864,234},
    {865,234}, {866,233}, {867,230}, {868,230}, {869,230}, {870,230}, {871,230}, {872,230},
    {873,230}, {874,230}, {875,230}, {876,230}, {877,230}, {878,230}, {879,230}, {1155,230},
    {1156,230}, {1157,230}, {1158,230}, {1159,230}, {1425,220}, {1426,230}, {1427,230}, {1428,230},
    {1429,230}, {1430,220}, {1431,230}, {1432,230}, {1433,230}, {1434,222}, {1435,220}, {1436,230},
    {1437,230}, {1438,230}, {1439,230}, {1440,230}, {1441,230}, {1442,220}, {1443,220}, {1444,220},
    {1445,220}, {1446,220}, {1447,220}, {1448,230}, {1449,230}, {1450,220}, {1451,230}, {1452,230},
    {1453,222}, {1454,228}, {1455,230}, {1456,10}, {1457,11}, {1458,12}, {1459,13}, {1460,14},
    {1461,15}, {1462,16}, {1463,17}, {1464,18}, {1465,19}, {1466,19}, {1467,20}, {1468,21},
    {1469,22}, {1471,23}, {1473,24}, {1474,25}, {1476,230}, {1477,220}, {1479,18}, {1552,230},
    {1553,230}, {1554,230}, {1555,230}, {1556,230}, {1557,230}, {1558,230}, {1559,230}, {1560,30},
    {1561,31}, {1562,32}, {1611,27}, {1612,28}, {1613,29}, {1614,30}, {1615,31}, {1616,32},
    {1617,33}, {1618,34}, {1619,230}, {1620,230}, {1621,220}, {1622,220}, {1623,230}, {1624,230},
    {1625,230}, {1626,230}, {1627,230}, {1628,220}, {1629,230}, {1630,230}, {1631,220}, {1648,35},
    {1750,230}, {1751,230}, {1752,230}, {1753,230}, {1754,230}, {1755,230}, {1756,230}, {1759,230},
    {1760,230}, {1761,230}, {1762,230}, {1763,220}, {1764,230}, {1767,230}, {1768,230}, {1770,220},
    {1771,230}, {1772,230}, {1773,220}, {1809,36}, {1840,230}, {1841,220}, {1842,230}, {1843,230},
    {1844,220}, {1845,230}, {1846,230}, {1847,220}, {1848,220}, {1849,220}, {1850,230}, {1851,220},
    {1852,220}, {1853,230}, {1854,220}, {1855,230}, {1856,230}, {1857,230}, {1858,220}, {1859,230},
    {1860,220}, {1861,230}, {1862,220}, {1863,230}, {1864,220}, {1865,230}, {1866,230}, {2027,230},
    {2028,230}, {2029,230}, {2030,230}, {2031,230}, {2032,230}, {2033,230}, {2034,220}, {2035,230},
    {2045,220}, {2070,230}, {2071,230}, {2072,230}, {2073,230}, {2075,230}, {2076,230}, {2077,230},
    {2078,230}, {2079,230}, {2080,230}, {2081,230}, {2082,230}, {2083,230}, {2085,230}, {2086,230},
    {2087,230}, {2089,230}, {2090,230}, {2091,230}, {2092,230}, {2093,230}, {2137,220}, {2138,220},
    {2139,220}, {2259,220}, {2260,230}, {2261,230}, {2262,230}, {2263,230}, {2264,230}, {2265,230},
    {2266,230}, {2267,230}, {2268,230}, {2269,230}, {2270,230}, {2271,230}, {2272,230}, {2273,230},
    {2275,220}, {2276,230}, {2277,230}, {2278,220}, {2279,230}, {2280,230}, {2281,220}, {2282,230},
    {2283,230}, {2284,230}, {2285,220}, {2286,220}, {2287,220}, {2288,27}, {2289,28}, {2290,29},
    {2291,230}, {2292,230}, {2293,230}, {2294,220}, {2295,230}, {2296,230}, {2297,220}, {2298,220},
    {2299,230}, {2300,230}, {2301,230}, {2302,230}, {2303,230}, {2364,7}, {2381,9}, {2385,230},
    {2386,220}, {2387,230}, {2388,230}, {2492,7}, {2509,9}, {2558,230}, {2620,7}, {2637,9},
    {2748,7}, {2765,9}, {2876,7}, {2893,9}, {3021,9}, {3149,9}, {3157,84}, {3158,91},
    {3260,7}, {3277,9}, {3387,9}, {3388,9}, {3405,9}, {3530,9}, {3640,103}, {3641,103},
    {3642,9}, {3656,107}, {3657,107}, {3658,107}, {3659,107}, {3768,118}, {3769,118}, {3770,9},
    {3784,122}, {3785,122}, {3786,122}, {3787,122}, {3864,220}, {3865,220}, {3893,220}, {3895,220},
    {3897,216}, {3953,129}, {3954,130}, {3956,132}, {3962,130}, {3963,130}, {3964,130}, {3965,130},
    {3968,130}, {3970,230}, {3971,230}, {3972,9}, {3974,230}, {3975,230}, {4038,220}, {4151,7},
    {4153,9}, {4154,9}, {4237,220}, {4957,230}, {4958,230}, {4959,230}, {5908,9}, {5940,9},
    {6098,9}, {6109,230}, {6313,228}, {6457,222}, {6458,230}, {6459,220}, {6679,230}, {6680,220},
    {6752,9}, {6773,230}, {6774,230}, {6775,230}, {6776,230}, {6777,230}, {6778,230}, {6779,230},
    {6780,230}, {6783,220}, {6832,230}, {6833,230}, {6834,230}, {6835,230}, {6836,230}, {6837,220},
    {6838,220}, {6839,220}, {6840,220}, {6841,220}, {6842,220}, {6843,230}, {6844,230}, {6845,220},
    {6847,220}, {6848,220}, {6964,7}, {6980,9}, {7019,230}, {7020,220}, {7021,230}, {7022,230},
    {7023,230}, {7024,230}, {7025,230}, {7026,230}, {7027,230}, {7082,9}, {7083,9}, {7142,7},
    {7154,9}, {7155,9}, {7223,7}, {7376,230}, {7377,230}, {7378,230}, {7380,1}, {7381,220},
    {7382,220}, {7383,220}, {7384,220}, {7385,220}, {7386,230}, {7387,230}, {7388,220}, {7389,220},
    {7390,220}, {7391,220}, {7392,230}, {7394,1}, {7395,1}, {7396,1}, {7397,1}, {7398,1},
    {7399,1}, {7400,1}, {7405,220}, {7412,230}, {7416,230}, {7417,230}, {7616,230}, {7617,230},
    {7618,220}, {7619,230}, {7620,230}, {7621,230}, {7622,230}, {7623,230}, {7624,230}, {7625,230},
    {7626,220}, {7627,230}, {7628,230}, {7629,234}, {7630,214}, {7631,220}, {7632,202}, {7633,230},
    {7634,230}, {7635,230}, {7636,230}, {7637,230}, {7638,230}, {7639,230}, {7640,230}, {7641,230},
    {7642,230}, {7643,230}, {7644,230}, {7645,230}, {7646,230}, {7647,230}, {7648,230}, {7649,230},
    {7650,230}, {7651,230}, {7652,230}, {7653,230}, {7654,230}, {7655,230}, {7656,230}, {7657,230},
    {7658,230}, {7659,230}, {7660,230}, {7661,230}, {7662,230}, {7663,230}, {7664,230}, {7665,230},
    {7666,230}, {7667,230}, {7668,230}, {7669,230}, {7670,232}, {7671,228}, {7672,228}, {7673,220},
    {7675,230}, {7676,233}, {7677,220}, {7678,230}, {7679,220}, {8400,230}, {8401,230}, {8402,1},
    {8403,1}, {8404,230}, {8405,230}, {8406,230}, {8407,230}, {8408,1}, {8409,1}, {8410,1},
    {8411,230}, {8412,230}, {8417,230}, {8421,1}, {8422,1}, {8423,230}, {8424,220}, {8425,230},
    {8426,1}, {8427,1}, {8428,220}, {8429,220}, {8430,220}, {8431,220}, {8432,230}, {11503,230},
    {11504,230}, {11505,230}, {11647,9}, {11744,230}, {11745,230}, {11746,230}, {11747,230}, {11748,230},
    {11749,230}, {11750,230}, {11751,230}, {11752,230}, {11753,230}, {11754,230}, {11755,230}, {11756,230},
    {11757,230}, {11758,230}, {11759,230}, {11760,230}, {11761,230}, {11762,230}, {11763,230}, {11764,230},
    {11765,230}, {11766,230}, {11767,230}, {11768,230}, {11769,230}, {11770,230}, {11771,230}, {11772,230},
    {11773,230}, {11774,230}, {11775,230}, {12330,218}, {12331,228}, {12332,232}, {12333,222}, {12334,224},
    {12335,224}, {12441,8}, {12442,8}, {42607,230}, {42612,230}, {42613,230}, {42614,230}, {42615,230},
    {42616,230}, {42617,230}, {42618,230}, {42619,230}, {42620,230}, {42621,230}, {42654,230}, {42655,230},
    {42736,230}, {42737,230}, {43014,9}, {43052,9}, {43204,9}, {43232,230}, {43233,230}, {43234,230},
    {43235,230}, {43236,230}, {43237,230}, {43238,230}, {43239,230}, {43240,230}, {43241,230}, {43242,230},
    {43243,230}, {43244,230}, {43245,230}, {43246,230}, {43247,230}, {43248,230}, {43249,230}, {43307,220},
    {43308,220}, {43309,220}, {43347,9}, {43443,7}, {43456,9}, {43696,230}, {43698,230}, {43699,230},
    {43700,220}, {43703,230}, {43704,230}, {43710,230}, {43711,230}, {43713,230}, {43766,9}, {44013,9},
    {64286,26}, {65056,230}, {65057,230}, {65058,230}, {65059,230}, {65060,230}, {65061,230}, {65062,230},
    {65063,220}, {65064,220}, {65065,220}, {65066,220}, {65067,220}, {65068,220}, {65069,220}, {65070,230},
    {65071,230}, {66045,220}, {66272,220}, {66422,230}, {66423,230}, {66424,230}, {66425,230}, {66426,230},
    {68109,220}, {68111,230}, {68152,230}, {68153,1}, {68154,220}, {68159,9}, {68325,230}, {68326,220},
    {68900,230}, {68901,230}, {68902,230}, {68903,230}, {69291,230}, {69292,230}, {69446,220}, {69447,220},
    {69448,230}, {69449,230}, {69450,230}, {69451,220}, {69452,230}, {69453,220}, {69454,220}, {69455,220},
    {69456,220}, {69702,9}, {69759,9}, {69817,9}, {69818,7}, {69888,230}, {69889,230}, {69890,230},
    {69939,9}, {69940,9}, {70003,7}, {70080,9}, {70090,7}, {70197,9}, {70198,7}, {70377,7},
    {70378,9}, {70459,7}, {70460,7}, {70477,9}, {70502,230}, {70503,230}, {70504,230}, {70505,230},
    {70506,230}, {70507,230}, {70508,230}, {70512,230}, {70513,230}, {70514,230}, {70515,230}, {70516,230},
    {70722,9}, {70726,7}, {70750,230}, {70850,9}, {70851,7}, {71103,9}, {71104,7}, {71231,9},
    {71350,9}, {71351,7}, {71467,9}, {71737,9}, {71738,7}, {71997,9}, {71998,9}, {72003,7},
    {72160,9}, {72244,9}, {72263,9}, {72345,9}, {72767,9}, {73026,7}, {73028,9}, {73029,9},
    {73111,9}, {92912,1}, {92913,1}, {92914,1}, {92915,1}, {92916,1}, {92976,230}, {92977,230},
    {92978,230}, {92979,230}, {92980,230}, {92981,230}, {92982,230}, {94192,6}, {94193,6}, {113822,1},
    {119141,216}, {119142,216}, {119143,1}, {119144,1}, {119145,1}, {119149,226}, {119150,216}, {119151,216},
    {119152,216}, {119153,216}, {119154,216}, {119163,220}, {119164,220}, {119165,220}, {119166,220}, {119167,220},
    {119168,220}, {119169,220}, {119170,220}, {119173,230}, {119174,230}, {119175,230}, {119176,230}, {119177,230},
    {119178,220}, {119179,220}, {119210,230}, {119211,230}, {119212,230}, {119213,230}, {119362,230}, {119363,230},
    {119364,230}, {122880,230}, {122881,230}, {122882,230}, {122883,230}, {122884,230}, {122885,230}, {122886,230},
    {122888,230}, {122889,230}, {122890,230}, {122891,230}, {122892,230}, {122893,230}, {122894,230}, {122895,230},
    {122896,230}, {122897,230}, {122898,230}, {122899,230}, {122900,230}, {122901,230}, {122902,230}, {122903,230},
    {122904,230}, {122907,230}, {122908,230}, {122909,230}, {122910,230}, {122911,230}, {122912,230}, {122913,230},
    {122915,230}, {122916,230}, {122918,230}, {122919,230}, {122920,230}, {122921,230}, {122922,230}, {123184,230},
    {123185,230}, {123186,230}, {123187,230}, {123188,230}, {123189,230}, {123190,230}, {123628,230}, {123629,230},
    {123630,230}, {123631,230}, {125136,220}, {125137,220}, {125138,220}, {125139,220}, {125140,220}, {125141,220},
    {125142,220}, {125252,230}, {125253,230}, {125254,230}, {125255,230}, {125256,230}, {125257,230}, {125258,7},
};
const std::size_t kCccRowCount = 872;

const CompRow kCompRows[] = {
    {60,824,8814}, {61,824,8800}, {62,824,8815}, {65,768,192},
    {65,769,193}, {65,770,194}, {65,771,195}, {65,772,256},
    {65,774,258}, {65,775,550}, {65,776,196}, {65,777,7842},
    {65,778,197}, {65,780,461}, {65,783,512}, {65,785,514},
    {65,803,7840}, {65,805,7680}, {65,808,260}, {66,775,7682},
    {66,803,7684}, {66,817,7686}, {67,769,262}, {67,770,264},
    {67,775,266}, {67,780,268}, {67,807,199}, {68,775,7690},
    {68,780,270}, {68,803,7692}, {68,807,7696}, {68,813,7698},
    {68,817,7694}, {69,768,200}, {69,769,201}, {69,770,202},
    {69,771,7868}, {69,772,274}, {69,774,276}, {69,775,278},
    {69,776,203}, {69,777,7866}, {69,780,282}, {69,783,516},
    {69,785,518}, {69,803,7864}, {69,807,552}, {69,808,280},
    {69,813,7704}, {69,816,7706}, {70,775,7710}, {71,769,500},
    {71,770,284}, {71,772,7712}, {71,774,286}, {71,775,288},
    {71,780,486}, {71,807,290}, {72,770,292}, {72,775,7714},
    {72,776,7718}, {72,780,542}, {72,803,7716}, {72,807,7720},
    {72,814,7722}, {73,768,204}, {73,769,205}, {73,770,206},
    {73,771,296}, {73,772,298}, {73,774,300}, {73,775,304},
    {73,776,207}, {73,777,7880}, {73,780,463}, {73,783,520},
    {73,785,522}, {73,803,7882}, {73,808,302}, {73,816,7724},
    {74,770,308}, {75,769,7728}, {75,780,488}, {75,803,7730},
    {75,807,310}, {75,817,7732}, {76,769,313}, {76,780,317},
    {76,803,7734}, {76,807,315}, {76,813,7740}, {76,817,7738},
    {77,769,7742}, {77,775,7744}, {77,803,7746}, {78,768,504},
    {78,769,323}, {78,771,209}, {78,775,7748}, {78,780,327},
    {78,803,7750}, {78,807,325}, {78,813,7754}, {78,817,7752},
    {79,768,210}, {79,769,211}, {79,770,212}, {79,771,213},
    {79,772,332}, {79,774,334}, {79,775,558}, {79,776,214},
    {79,777,7886}, {79,779,336}, {79,780,465}, {79,783,524},
    {79,785,526}, {79,795,416}, {79,803,7884}, {79,808,490},
    {80,769,7764}, {80,775,7766}, {82,769,340}, {82,775,7768},
    {82,780,344}, {82,783,528}, {82,785,530}, {82,803,7770},
    {82,807,342}, {82,817,7774}, {83,769,346}, {83,770,348},
    {83,775,7776}, {83,780,352}, {83,803,7778}, {83,806,536},
    {83,807,350}, {84,775,7786}, {84,780,356}, {84,803,7788},
    {84,806,538}, {84,807,354}, {84,813,7792}, {84,817,7790},
    {85,768,217}, {85,769,218}, {85,770,219}, {85,771,360},
    {85,772,362}, {85,774,364}, {85,776,220}, {85,777,7910},
    {85,778,366}, {85,779,368}, {85,780,467}, {85,783,532},
    {85,785,534}, {85,795,431}, {85,803,7908}, {85,804,7794},
    {85,808,370}, {85,813,7798}, {85,816,7796}, {86,771,7804},
    {86,803,7806}, {87,768,7808}, {87,769,7810}, {87,770,372},
    {87,775,7814}, {87,776,7812}, {87,803,7816}, {88,775,7818},
    {88,776,7820}, {89,768,7922}, {89,769,221}, {89,770,374},
    {89,771,7928}, {89,772,562}, {89,775,7822}, {89,776,376},
    {89,777,7926}, {89,803,7924}, {90,769,377}, {90,770,7824},
    {90,775,379}, {90,780,381}, {90,803,7826}, {90,817,7828},
    {97,768,224}, {97,769,225}, {97,770,226}, {97,771,227},
    {97,772,257}, {97,774,259}, {97,775,551}, {97,776,228},
    {97,777,7843}, {97,778,229}, {97,780,462}, {97,783,513},
    {97,785,515}, {97,803,7841}, {97,805,7681}, {97,808,261},
    {98,775,7683}, {98,803,7685}, {98,817,7687}, {99,769,263},
    {99,770,265}, {99,775,267}, {99,780,269}, {99,807,231},
    {100,775,7691}, {100,780,271}, {100,803,7693}, {100,807,7697},
    {100,813,7699}, {100,817,7695}, {101,768,232}, {101,769,233},
    {101,770,234}, {101,771,7869}, {101,772,275}, {101,774,277},
    {101,775,279}, {101,776,235}, {101,777,7867}, {101,780,283},
    {101,783,517}, {101,785,519}, {101,803,7865}, {101,807,553},
    {101,808,281}, {101,813,7705}, {101,816,7707}, {102,775,7711},
    {103,769,501}, {103,770,285}, {103,772,7713}, {103,774,287},
    {103,775,289}, {103,780,487}, {103,807,291}, {104,770,293},
    {104,775,7715}, {104,776,7719}, {104,780,543}, {104,803,7717},
    {104,807,7721}, {104,814,7723}, {104,817,7830}, {105,768,236},
    {105,769,237}, {105,770,238}, {105,771,297}, {105,772,299},
    {105,774,301}, {105,776,239}, {105,777,7881}, {105,780,464},
    {105,783,521}, {105,785,523}, {105,803,7883}, {105,808,303},
    {105,816,7725}, {106,770,309}, {106,780,496}, {107,769,7729},
    {107,780,489}, {107,803,7731}, {107,807,311}, {107,817,7733},
    {108,769,314}, {108,780,318}, {108,803,7735}, {108,807,316},
    {108,813,7741}, {108,817,7739}, {109,769,7743}, {109,775,7745},
    {109,803,7747}, {110,768,505}, {110,769,324}, {110,771,241},
    {110,775,7749}, {110,780,328}, {110,803,7751}, {110,807,326},
    {110,813,7755}, {110,817,7753}, {111,768,242}, {111,769,243},
    {111,770,244}, {111,771,245}, {111,772,333}, {111,774,335},
    {111,775,559}, {111,776,246}, {111,777,7887}, {111,779,337},
    {111,780,466}, {111,783,525}, {111,785,527}, {111,795,417},
    {111,803,7885}, {111,808,491}, {112,769,7765}, {112,775,7767},
    {114,769,341}, {114,775,7769}, {114,780,345}, {114,783,529},
    {114,785,531}, {114,803,7771}, {114,807,343}, {114,817,7775},
    {115,769,347}, {115,770,349}, {115,775,7777}, {115,780,353},
    {115,803,7779}, {115,806,537}, {115,807,351}, {116,775,7787},
    {116,776,7831}, {116,780,357}, {116,803,7789}, {116,806,539},
    {116,807,355}, {116,813,7793}, {116,817,7791}, {117,768,249},
    {117,769,250}, {117,770,251}, {117,771,361}, {117,772,363},
    {117,774,365}, {117,776,252}, {117,777,7911}, {117,778,367},
    {117,779,369}, {117,780,468}, {117,783,533}, {117,785,535},
    {117,795,432}, {117,803,7909}, {117,804,7795}, {117,808,371},
    {117,813,7799}, {117,816,7797}, {118,771,7805}, {118,803,7807},
    {119,768,7809}, {119,769,7811}, {119,770,373}, {119,775,7815},
    {119,776,7813}, {119,778,7832}, {119,803,7817}, {120,775,7819},
    {120,776,7821}, {121,768,7923}, {121,769,253}, {121,770,375},
    {121,771,7929}, {121,772,563}, {121,775,7823}, {121,776,255},
    {121,777,7927}, {121,778,7833}, {121,803,7925}, {122,769,378},
    {122,770,7825}, {122,775,380}, {122,780,382}, {122,803,7827},
    {122,817,7829}, {168,768,8173}, {168,769,901}, {168,834,8129},
    {194,768,7846}, {194,769,7844}, {194,771,7850}, {194,777,7848},
    {196,772,478}, {197,769,506}, {198,769,508}, {198,772,482},
    {199,769,7688}, {202,768,7872}, {202,769,7870}, {202,771,7876},
    {202,777,7874}, {207,769,7726}, {212,768,7890}, {212,769,7888},
    {212,771,7894}, {212,777,7892}, {213,769,7756}, {213,772,556},
    {213,776,7758}, {214,772,554}, {216,769,510}, {220,768,475},
    {220,769,471}, {220,772,469}, {220,780,473}, {226,768,7847},
    {226,769,7845}, {226,771,7851}, {226,777,7849}, {228,772,479},
    {229,769,507}, {230,769,509}, {230,772,483}, {231,769,7689},
    {234,768,7873}, {234,769,7871}, {234,771,7877}, {234,777,7875},
    {239,769,7727}, {244,768,7891}, {244,769,7889}, {244,771,7895},
    {244,777,7893}, {245,769,7757}, {245,772,557}, {245,776,7759},
    {246,772,555}, {248,769,511}, {252,768,476}, {252,769,472},
    {252,772,470}, {252,780,474}, {258,768,7856}, {258,769,7854},
    {258,771,7860}, {258,777,7858}, {259,768,7857}, {259,769,7855},
    {259,771,7861}, {259,777,7859}, {274,768,7700}, {274,769,7702},
    {275,768,7701}, {275,769,7703}, {332,768,7760}, {332,769,7762},
    {333,768,7761}, {333,769,7763}, {346,775,7780}, {347,775,7781},
    {352,775,7782}, {353,775,7783}, {360,769,7800}, {361,769,7801},
    {362,776,7802}, {363,776,7803}, {383,775,7835}, {416,768,7900},
    {416,769,7898}, {416,771,7904}, {416,777,7902}, {416,803,7906},
    {417,768,7901}, {417,769,7899}, {417,771,7905}, {417,777,7903},
    {417,803,7907}, {431,768,7914}, {431,769,7912}, {431,771,7918},
    {431,777,7916}, {431,803,7920}, {432,768,7915}, {432,769,7913},
    {432,771,7919}, {432,777,7917}, {432,803,7921}, {439,780,494},
    {490,772,492}, {491,772,493}, {550,772,480}, {551,772,481},
    {552,774,7708}, {553,774,7709}, {558,772,560}, {559,772,561},
    {658,780,495}, {913,768,8122}, {913,769,902}, {913,772,8121},
    {913,774,8120}, {913,787,7944}, {913,788,7945}, {913,837,8124},
    {917,768,8136}, {917,769,904}, {917,787,7960}, {917,788,7961},
    {919,768,8138}, {919,769,905}, {919,787,7976}, {919,788,7977},
    {919,837,8140}, {921,768,8154}, {921,769,906}, {921,772,8153},
    {921,774,8152}, {921,776,938}, {921,787,7992}, {921,788,7993},
    {927,768,8184}, {927,769,908}, {927,787,8008}, {927,788,8009},
    {929,788,8172}, {933,768,8170}, {933,769,910}, {933,772,8169},
    {933,774,8168}, {933,776,939}, {933,788,8025}, {937,768,8186},
    {937,769,911}, {937,787,8040}, {937,788,8041}, {937,837,8188},
    {940,837,8116}, {942,837,8132}, {945,768,8048}, {945,769,940},
    {945,772,8113}, {945,774,8112}, {945,787,7936}, {945,788,7937},
    {945,834,8118}, {945,837,8115}, {949,768,8050}, {949,769,941},
    {949,787,7952}, {949,788,7953}, {951,768,8052}, {951,769,942},
    {951,787,7968}, {951,788,7969}, {951,834,8134}, {951,837,8131},
    {953,768,8054}, {953,769,943}, {953,772,8145}, {953,774,8144},
    {953,776,970}, {953,787,7984}, {953,788,7985}, {953,834,8150},
    {959,768,8056}, {959,769,972}, {959,787,8000}, {959,788,8001},
    {961,787,8164}, {961,788,8165}, {965,768,8058}, {965,769,973},
    {965,772,8161}, {965,774,8160}, {965,776,971}, {965,787,8016},
    {965,788,8017}, {965,834,8166}, {969,768,8060}, {969,769,974},
    {969,787,8032}, {969,788,8033}, {969,834,8182}, {969,837,8179},
    {970,768,8146}, {970,769,912}, {970,834,8151}, {971,768,8162},
    {971,769,944}, {971,834,8167}, {974,837,8180}, {978,769,979},
    {978,776,980}, {1030,776,1031}, {1040,774,1232}, {1040,776,1234},
    {1043,769,1027}, {1045,768,1024}, {1045,774,1238}, {1045,776,1025},
    {1046,774,1217}, {1046,776,1244}, {1047,776,1246}, {1048,768,1037},
    {1048,772,1250}, {1048,774,1049}, {1048,776,1252}, {1050,769,1036},
    {1054,776,1254}, {1059,772,1262}, {1059,774,1038}, {1059,776,1264},
    {1059,779,1266}, {1063,776,1268}, {1067,776,1272}, {1069,776,1260},
    {1072,774,1233}, {1072,776,1235}, {1075,769,1107}, {1077,768,1104},
    {1077,774,1239}, {1077,776,1105}, {1078,774,1218}, {1078,776,1245},
    {1079,776,1247}, {1080,768,1117}, {1080,772,1251}, {1080,774,1081},
    {1080,776,1253}, {1082,769,1116}, {1086,776,1255}, {1091,772,1263},
    {1091,774,1118}, {1091,776,1265}, {1091,779,1267}, {1095,776,1269},
    {1099,776,1273}, {1101,776,1261}, {1110,776,1111}, {1140,783,1142},
    {1141,783,1143}, {1240,776,1242}, {1241,776,1243}, {1256,776,1258},
    {1257,776,1259}, {1575,1619,1570}, {1575,1620,1571}, {1575,1621,1573},
    {1608,1620,1572}, {1610,1620,1574}, {1729,1620,1730}, {1746,1620,1747},
    {1749,1620,1728}, {2344,2364,2345}, {2352,2364,2353}, {2355,2364,2356},
    {2503,2494,2507}, {2503,2519,2508}, {2887,2878,2891}, {2887,2902,2888},
    {2887,2903,2892}, {2962,3031,2964}, {3014,3006,3018}, {3014,3031,3020},
    {3015,3006,3019}, {3142,3158,3144}, {3263,3285,3264}, {3270,3266,3274},
    {3270,3285,3271}, {3270,3286,3272}, {3274,3285,3275}, {3398,3390,3402},
    {3398,3415,3404}, {3399,3390,3403}, {3545,3530,3546}, {3545,3535,3548},
    {3545,3551,3550}, {3548,3530,3549}, {4133,4142,4134}, {6917,6965,6918},
    {6919,6965,6920}, {6921,6965,6922}, {6923,6965,6924}, {6925,6965,6926},
    {6929,6965,6930}, {6970,6965,6971}, {6972,6965,6973}, {6974,6965,6976},
    {6975,6965,6977}, {6978,6965,6979}, {7734,772,7736}, {7735,772,7737},
    {7770,772,7772}, {7771,772,7773}, {7778,775,7784}, {7779,775,7785},
    {7840,770,7852}, {7840,774,7862}, {7841,770,7853}, {7841,774,7863},
    {7864,770,7878}, {7865,770,7879}, {7884,770,7896}, {7885,770,7897},
    {7936,768,7938}, {7936,769,7940}, {7936,834,7942}, {7936,837,8064},
    {7937,768,7939}, {7937,769,7941}, {7937,834,7943}, {7937,837,8065},
    {7938,837,8066}, {7939,837,8067}, {7940,837,8068}, {7941,837,8069},
    {7942,837,8070}, {7943,837,8071}, {7944,768,7946}, {7944,769,7948},
    {7944,834,7950}, {7944,837,8072}, {7945,768,7947}, {7945,769,7949},
    {7945,834,7951}, {7945,837,8073}, {7946,837,8074}, {7947,837,8075},
    {7948,837,8076}, {7949,837,8077}, {7950,837,8078}, {7951,837,8079},
    {7952,768,7954}, {7952,769,7956}, {7953,768,7955}, {7953,769,7957},
    {7960,768,7962}, {7960,769,7964}, {7961,768,7963}, {7961,769,7965},
    {7968,768,7970}, {7968,769,7972}, {7968,834,7974}, {7968,837,8080},
    {7969,768,7971}, {7969,769,7973}, {7969,834,7975}, {7969,837,8081},
    {7970,837,8082}, {7971,837,8083}, {7972,837,8084}, {7973,837,8085},
    {7974,837,8086}, {7975,837,8087}, {7976,768,7978}, {7976,769,7980},
    {7976,834,7982}, {7976,837,8088}, {7977,768,7979}, {7977,769,7981},
    {7977,834,7983}, {7977,837,8089}, {7978,837,8090}, {7979,837,8091},
    {7980,837,8092}, {7981,837,8093}, {7982,837,8094}, {7983,837,8095},
    {7984,768,7986}, {7984,769,7988}, {7984,834,7990}, {7985,768,7987},
    {7985,769,7989}, {7985,834,7991}, {7992,768,7994}, {7992,769,7996},
    {7992,834,7998}, {7993,768,7995}, {7993,769,7997}, {7993,834,7999},
    {8000,768,8002}, {8000,769,8004}, {8001,768,8003}, {8001,769,8005},
    {8008,768,8010}, {8008,769,8012}, {8009,768,8011}, {8009,769,8013},
    {8016,768,8018}, {8016,769,8020}, {8016,834,8022}, {8017,768,8019},
    {8017,769,8021}, {8017,834,8023}, {8025,768,8027}, {8025,769,8029},
    {8025,834,8031}, {8032,768,8034}, {8032,769,8036}, {8032,834,8038},
    {8032,837,8096}, {8033,768,8035}, {8033,769,8037}, {8033,834,8039},
    {8033,837,8097}, {8034,837,8098}, {8035,837,8099}, {8036,837,8100},
    {8037,837,8101}, {8038,837,8102}, {8039,837,8103}, {8040,768,8042},
    {8040,769,8044}, {8040,834,8046}, {8040,837,8104}, {8041,768,8043},
    {8041,769,8045}, {8041,834,8047}, {8041,837,8105}, {8042,837,8106},
    {8043,837,8107}, {8044,837,8108}, {8045,837,8109}, {8046,837,8110},
    {8047,837,8111}, {8048,837,8114}, {8052,837,8130}, {8060,837,8178},
    {8118,837,8119}, {8127,768,8141}, {8127,769,8142}, {8127,834,8143},
    {8134,837,8135}, {8182,837,8183}, {8190,768,8157}, {8190,769,8158},
    {8190,834,8159}, {8592,824,8602}, {8594,824,8603}, {8596,824,8622},
    {8656,824,8653}, {8658,824,8655}, {8660,824,8654}, {8707,824,8708},
    {8712,824,8713}, {8715,824,8716}, {8739,824,8740}, {8741,824,8742},
    {8764,824,8769}, {8771,824,8772}, {8773,824,8775}, {8776,824,8777},
    {8781,824,8813}, {8801,824,8802}, {8804,824,8816}, {8805,824,8817},
    {8818,824,8820}, {8819,824,8821}, {8822,824,8824}, {8823,824,8825},
    {8826,824,8832}, {8827,824,8833}, {8828,824,8928}, {8829,824,8929},
    {8834,824,8836}, {8835,824,8837}, {8838,824,8840}, {8839,824,8841},
    {8849,824,8930}, {8850,824,8931}, {8866,824,8876}, {8872,824,8877},
    {8873,824,8878}, {8875,824,8879}, {8882,824,8938}, {8883,824,8939},
    {8884,824,8940}, {8885,824,8941}, {12358,12441,12436}, {12363,12441,12364},
    {12365,12441,12366}, {12367,12441,12368}, {12369,12441,12370}, {12371,12441,12372},
    {12373,12441,12374}, {12375,12441,12376}, {12377,12441,12378}, {12379,12441,12380},
    {12381,12441,12382}, {12383,12441,12384}, {12385,12441,12386}, {12388,12441,12389},
    {12390,12441,12391}, {12392,12441,12393}, {12399,12441,12400}, {12399,12442,12401},
    {12402,12441,12403}, {12402,12442,12404}, {12405,12441,12406}, {12405,12442,12407},
    {12408,12441,12409}, {12408,12442,12410}, {12411,12441,12412}, {12411,12442,12413},
    {12445,12441,12446}, {12454,12441,12532}, {12459,12441,12460}, {12461,12441,12462},
    {12463,12441,12464}, {12465,12441,12466}, {12467,12441,12468}, {12469,12441,12470},
    {12471,12441,12472}, {12473,12441,12474}, {12475,12441,12476}, {12477,12441,12478},
    {12479,12441,12480}, {12481,12441,12482}, {12484,12441,12485}, {12486,12441,12487},
    {12488,12441,12489}, {12495,12441,12496}, {12495,12442,12497}, {12498,12441,12499},
    {12498,12442,12500}, {12501,12441,12502}, {12501,12442,12503}, {12504,12441,12505},
    {12504,12442,12506}, {12507,12441,12508}, {12507,12442,12509}, {12527,12441,12535},
    {12528,12441,12536}, {12529,12441,12537}, {12530,12441,12538}, {12541,12441,12542},
    {69785,69818,69786}, {69787,69818,69788}, {69797,69818,69803}, {69937,69927,69934},
    {69938,69927,69935}, {70471,70462,70475}, {70471,70487,70476}, {70841,70832,70844},
    {70841,70842,70843}, {70841,70845,70846}, {71096,71087,71098}, {71097,71087,71099},
    {71989,71984,71992},
};
const std::size_t kCompRowCount = 941;

}  // namespace spanlab::unicode::detail
