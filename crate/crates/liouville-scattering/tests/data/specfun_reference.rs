// Generated by tools/gen_reference_tables.py (mpmath, 50-digit precision).
// Do not edit by hand; regenerate with the script instead.

/// (z_re, z_im, gamma_re, gamma_im)
pub const GAMMA_REF: &[(f64, f64, f64, f64)] = &[
    (1.0, 0.0, 1.0, 0.0),
    (0.5, 0.0, 1.772453850905516, 0.0),
    (1.0, 0.7, 0.6728253931632454, -0.20285243648300008),
    (3.0, 0.0, 2.0, 0.0),
    (10.0, 0.0, 362880.0, 0.0),
    (49.0, 0.0, 1.2413915592536073e+61, 0.0),
    (4.0, 10.0, 0.0007715342942399663, -0.0010190827990417123),
    (25.0, 25.0, -1.1135374386467985e+18, 8.889271476009894e+18),
    (0.5, 49.0, -8.871985984445315e-34, -3.02278185870457e-34),
    (12.0, -30.0, 0.0010898097517863042, 1.7910480744078873e-05),
    (2.0, -2.0, 0.11229424234632618, -0.32361288550192724),
    (0.5, -11.0, -7.435782365039616e-08, -2.524740922043739e-08),
    (-5.3, 2.2, -7.597086909186752e-06, -4.596783839177819e-05),
    (-10.0, 0.5, 3.5142026531568395e-07, -1.4640057226354223e-07),
    (-0.5, -0.5, -1.58147782825573, 0.05485017082776478),
    (-3.5, 0.0, 0.2700882058522691, 0.0),
    (-20.0, 0.001, 1.2415274000369786e-18, -4.110292212019336e-16),
    (0.001, 0.0, 999.4237724845955, 0.0),
    (0.001, 0.001, 499.4237733891342, -499.9990127569994),
    (30.0, -7.0, 7.475442740243943e+29, 3.8106329960017394e+30),
];

/// (lambda, order_sign, z_re, z_im, i_re, i_im, di_re, di_im)
/// order = order_sign * i * lambda; di is the z-derivative.
pub const BESSEL_I_REF: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.5, 1.0, 1e-06, 0.0, 0.9043031072019614, -0.8045422758575828, 402271.1379289922, 452151.55360047804),
    (0.5, -1.0, 0.5, 0.0, 1.132169573720205, 0.5799661155570657, 0.7488070460603096, -0.910437529374917),
    (0.5, 1.0, 2.0, 0.0, 2.4904853295894434, -0.07920683555109428, 1.621117035122375, 0.09550730638648428),
    (0.5, -1.0, 5.0, 0.0, 28.025853684631223, 0.0026425348582313235, 24.849925394663565, -0.0028844239737877216),
    (0.5, 1.0, 10.0, 0.0, 2853.160746435149, -1.2869831557525158e-05, 2702.505549020552, 1.3483932868391102e-05),
    (0.5, -1.0, 25.0, 0.0, 5804114120.958929, 2.525174638747653e-12, 5685610707.446, -2.574706043172872e-12),
    (0.5, 1.0, 29.5, 0.0, 480210379165.81445, -2.5862149466628414e-14, 471928313717.90216, 2.6293300371322202e-14),
    (0.5, -1.0, 31.0, 0.0, 2098548966878.009, 5.631518920050609e-15, 2064136870458.184, -5.7209297950727634e-15),
    (0.5, 1.0, 36.0, 0.0, 288681734818820.4, -3.524968531286835e-17, 284614958015017.7, 3.573264539813643e-17),
    (0.5, -1.0, 45.0, 0.0, 2.0892755394406047e+18, 3.896176221704973e-21, 2.0657974821137055e+18, -3.9389963797621124e-21),
    (0.5, 1.0, 0.0, 8.0, 0.10564546590666034, 0.0873809316362211, 0.06412524672339746, 0.1403065005452051),
    (0.5, -1.0, 0.5, 12.0, 0.1004651142263657, 0.1447678001549305, -0.024109273654560826, -0.512249107962191),
    (0.5, 1.0, 0.1, 25.0, 0.06194982020590975, -0.05844186809269399, 0.045193487077884884, -0.0812898490949914),
    (0.5, -1.0, 0.2, 29.0, -0.3812383415786549, -0.015056709978125348, 0.2010344088219328, 0.02023385146947185),
    (0.5, 1.0, 1.0, 35.0, -0.17786521889315798, 0.05855593609355646, -0.1690311504574342, 0.059678142671608606),
    (0.5, -1.0, 3.0, 2.0, -0.34216199037980216, 4.430015727905895, -0.8206473553980366, 3.9304366819617673),
    (0.5, 1.0, 1.0, 1.0, 0.9178733473336858, 0.4200991226295297, 0.5732515907037943, 0.6559817109395502),
    (0.5, -1.0, 10.0, 10.0, -2332.1151879941744, -398.7987832343948, -2263.4912884523255, -450.2186325661665),
    (0.5, 1.0, 20.0, 5.0, 6960250.39222933, -42579810.98772496, 7055871.989221346, -41511857.345663205),
    (0.5, -1.0, 7.0, 24.0, -18.72947840414645, -85.7057682565175, -16.967793364702633, -85.61974099407864),
    (0.5, 1.0, 2.0, 40.0, 0.017186317054299734, 0.4638296824907695, 0.011082994429502963, 0.46736004413283133),
    (0.5, -1.0, 15.0, 3.0, -328990.64878746064, 81809.76911672442, -318662.3786076855, 76842.74177697107),
    (0.5, 1.0, 0.3, -18.0, -0.03771456124717394, -0.20703016831243992, 0.014342852697363693, 0.46170985584916197),
    (0.5, -1.0, 12.0, -6.0, 15613.056325872396, 9021.73381961225, 15240.833055760293, 8434.004298036753),
    (0.8, 1.0, 1e-06, 0.0, 0.4722304109801931, 1.4889256827518456, -1191140.5462009693, 377784.32878449326),
    (0.8, -1.0, 0.5, 0.0, 1.0894934169784993, 1.2027272598758365, 1.9495782048814114, -1.4309688550041222),
    (0.8, 1.0, 2.0, 0.0, 2.8510102722970307, -0.19453222266273543, 1.6797818583455364, 0.2277048272117198),
    (0.8, -1.0, 5.0, 0.0, 29.303875776536735, 0.006793645354652423, 25.671418535985506, -0.0073704136726681834),
    (0.8, 1.0, 10.0, 0.0, 2912.613827696369, -3.366061914110004e-05, 2752.430705896405, 3.520671958170351e-05),
    (0.8, -1.0, 25.0, 0.0, 5850524335.883196, 6.677403665982299e-12, 5729169003.85204, -6.806375565415599e-12),
    (0.8, 1.0, 29.5, 0.0, 483451736385.3236, -6.84667440690112e-14, 475001516646.56854, 6.95933094234878e-14),
    (0.8, -1.0, 31.0, 0.0, 2112014431010.4475, 1.4913348932932815e-14, 2076938252828.2207, -1.5147192271618382e-14),
    (0.8, 1.0, 36.0, 0.0, 290272293604182.4, -9.342723618582321e-17, 286138154792414.2, 9.469360806963907e-17),
    (0.8, -1.0, 45.0, 0.0, 2.098452626017892e+18, 1.0337513443856969e-20, 2.0746646834602831e+18, -1.0450151645178955e-20),
    (0.8, 1.0, 0.0, 8.0, 0.0972571593318125, 0.09925967215316185, 0.07712025056659334, 0.12354802127926635),
    (0.8, -1.0, 0.5, 12.0, 0.17637804526268974, 0.6622590338683253, -0.12763294266674774, -1.0310663732606147),
    (0.8, 1.0, 0.1, 25.0, 0.05588136196266222, -0.06615933832467644, 0.0503185461354019, -0.07451825549409231),
    (0.8, -1.0, 0.2, 29.0, -0.8364234297646972, -0.052230146863193265, 0.6572953788237627, 0.05081809279816071),
    (0.8, 1.0, 1.0, 35.0, -0.17459611834939762, 0.060634219421487064, -0.1717087252709875, 0.05958988044523594),
    (0.8, -1.0, 3.0, 2.0, -0.11915088879126522, 4.60790408206006, -0.838518579765293, 4.177327287420828),
    (0.8, 1.0, 1.0, 1.0, 1.00790323986294, 0.3136303403797941, 0.7514145417741437, 0.6992804176741195),
    (0.8, -1.0, 10.0, 10.0, -2358.890042341779, -378.49395262515316, -2289.884576458321, -433.55816076345053),
    (0.8, 1.0, 20.0, 5.0, 6922204.592013505, -42998332.643566616, 7028411.586267808, -41900759.97735159),
    (0.8, -1.0, 7.0, 24.0, -19.4173868312074, -85.7364506096457, -17.642636115403285, -85.69096150965802),
    (0.8, 1.0, 2.0, 40.0, 0.01936553730726649, 0.4649046896677131, 0.013426257722259137, 0.46636118532244686),
    (0.8, -1.0, 15.0, 3.0, -333043.81290107744, 83766.88968208508, -322351.6960305691, 78519.7947794218),
    (0.8, 1.0, 0.3, -18.0, -0.09351564498370962, -0.7284538688482567, 0.05311682341081841, 0.985664457762051),
    (0.8, -1.0, 12.0, -6.0, 15758.297885339127, 9253.17522993735, 15383.727108630996, 8633.732286542625),
    (1.0, 1.0, 1e-06, 0.0, -0.1338161440776571, -1.9126346096314593, 1912634.6096309477, -133816.1440781018),
    (1.0, -1.0, 1e-06, 0.0, -0.1338161440776571, 1.9126346096314593, 1912634.6096309477, 133816.1440781018),
    (1.0, 1.0, 0.5, 0.0, 0.8699973632047544, -1.7770016885719335, 3.4474523214875, 1.409230965573501),
    (1.0, -1.0, 0.5, 0.0, 0.8699973632047544, 1.7770016885719335, 3.4474523214875, -1.409230965573501),
    (1.0, 1.0, 2.0, 0.0, 3.217490663271961, -0.33961614834290055, 1.7528029214306222, 0.38625093536191935),
    (1.0, -1.0, 2.0, 0.0, 3.217490663271961, 0.33961614834290055, 1.7528029214306222, -0.38625093536191935),
    (1.0, 1.0, 5.0, 0.0, 30.542593924781222, -0.012377721889973096, 26.450749839737938, 0.01335235500238836),
    (1.0, -1.0, 5.0, 0.0, 30.542593924781222, 0.012377721889973096, 26.450749839737938, -0.01335235500238836),
    (1.0, 1.0, 10.0, 0.0, 2968.640799269459, -6.231222598481186e-05, 2799.349031613439, 6.507157134563884e-05),
    (1.0, -1.0, 10.0, 0.0, 2968.640799269459, 6.231222598481186e-05, 2799.349031613439, -6.507157134563884e-05),
    (1.0, 1.0, 25.0, 0.0, 5893698670.716651, -1.2487127937211731e-11, 5769676345.197172, 1.2724849695632395e-11),
    (1.0, -1.0, 25.0, 0.0, 5893698670.716651, 1.2487127937211731e-11, 5769676345.197172, -1.2724849695632395e-11),
    (1.0, 1.0, 29.5, 0.0, 486463411475.2375, -1.2817259735471044e-13, 477856263622.93005, 1.302559052863999e-13),
    (1.0, -1.0, 29.5, 0.0, 486463411475.2375, 1.2817259735471044e-13, 477856263622.93005, -1.302559052863999e-13),
    (1.0, 1.0, 31.0, 0.0, 2124521654278.281, -2.792639869332939e-14, 2088826068400.3718, 2.8359216151407835e-14),
    (1.0, -1.0, 31.0, 0.0, 2124521654278.281, 2.792639869332939e-14, 2088826068400.3718, -2.8359216151407835e-14),
    (1.0, 1.0, 36.0, 0.0, 291748355678014.94, -1.7508686989329966e-16, 287551479699608.75, 1.7743643028972032e-16),
    (1.0, -1.0, 36.0, 0.0, 291748355678014.94, 1.7508686989329966e-16, 287551479699608.75, -1.7743643028972032e-16),
    (1.0, 1.0, 45.0, 0.0, 2.106959835770311e+18, -1.939188930844291e-20, 2.0828838092023073e+18, 1.9601497503181775e-20),
    (1.0, -1.0, 45.0, 0.0, 2.106959835770311e+18, 1.939188930844291e-20, 2.0828838092023073e+18, -1.9601497503181775e-20),
    (1.0, 1.0, 0.0, 8.0, 0.09621340796965959, 0.10126081456256653, 0.08286942324596651, 0.11736096256126732),
    (1.0, -1.0, 0.0, 8.0, 2.226444900978088, -2.343245385537211, -1.9176558519906044, 2.7158139617174024),
    (1.0, 1.0, 0.5, 12.0, 0.0358901129863192, -0.18348195580755514, 0.04273572828201353, -0.1884316199394095),
    (1.0, -1.0, 0.5, 12.0, 0.27045826196196265, 1.4051044658536425, -0.25819381614880155, -1.7768879075642436),
    (1.0, 1.0, 0.1, 25.0, 0.05373287461517868, -0.06871252868688572, 0.05149851791198529, -0.07276233830360186),
    (1.0, -1.0, 0.1, 25.0, 1.0297423851644505, 1.2821151518174119, -0.9525134819382297, -1.4055709895872657),
    (1.0, 1.0, 0.2, 29.0, -0.09279889137224273, 0.006811416068673455, -0.08774963862970096, 0.0056608508152617),
    (1.0, -1.0, 0.2, 29.0, -1.487965710069706, -0.11165731639146195, 1.3106550429595938, 0.10022779464578024),
    (1.0, 1.0, 1.0, 35.0, -0.17341550296980118, 0.0618593862815841, -0.172322907802084, 0.06017284450451035),
    (1.0, -1.0, 1.0, 35.0, -0.7060667020656716, -0.14781767457007597, 0.3637993891508894, 0.2624617810051661),
    (1.0, 1.0, 3.0, 2.0, -0.04059270069923633, 4.884387733585706, -0.6961906658340704, 4.285047541315613),
    (1.0, -1.0, 3.0, 2.0, 0.12831016900737227, 4.7577131247830104, -0.8761063085550315, 4.431060936762772),
    (1.0, 1.0, 1.0, 1.0, 1.090154275160437, 0.20250791140438434, 0.9225755913364245, 0.7176115535463206),
    (1.0, -1.0, 1.0, 1.0, 3.0667356425461314, 1.032654327930381, -1.494020777501838, -0.2018982837048836),
    (1.0, 1.0, 10.0, 10.0, -2383.641151798372, -359.3221398101726, -2314.3369512059157, -417.8083816059489),
    (1.0, -1.0, 10.0, 10.0, -2383.641238758082, -359.32220356816794, -2314.3368606791096, -417.8083181779765),
    (1.0, 1.0, 20.0, 5.0, 6885824.726947606, -43388134.16853172, 7002066.478342171, -42262838.14753852),
    (1.0, -1.0, 20.0, 5.0, 6885824.726947602, -43388134.16853172, 7002066.478342175, -42262838.14753852),
    (1.0, 1.0, 7.0, 24.0, -20.053088351908656, -85.76138760826787, -18.268025917636816, -85.75111565659428),
    (1.0, -1.0, 7.0, 24.0, -20.053906993218636, -85.75993417681428, -18.26722911712539, -85.75259366606515),
    (1.0, 1.0, 2.0, 40.0, 0.021432844862961584, 0.4652127591577437, 0.015543027383224578, 0.4661049674874825),
    (1.0, -1.0, 2.0, 40.0, 0.040272503534790345, 0.2692540597805967, -0.0008817500873157949, 0.6624954396980902),
    (1.0, 1.0, 15.0, 3.0, -336828.06698452675, 85606.85036293244, -325794.07018264884, 80094.07942307153),
    (1.0, -1.0, 15.0, 3.0, -336828.0669844918, 85606.85036224013, -325794.070182681, 80094.0794237846),
    (1.0, 1.0, 0.3, -18.0, -0.18351684919269937, -1.4738316890227265, 0.1203117328495815, 1.735587927078263),
    (1.0, -1.0, 0.3, -18.0, -0.01178826106099522, 0.12336455465188215, -0.007740612165253983, 0.1298593620540855),
    (1.0, 1.0, 12.0, -6.0, 15892.58954041211, 9470.571576882714, 15516.163494155997, 8821.185155957688),
    (1.0, -1.0, 12.0, -6.0, 15892.589541464089, 9470.57159168647, 15516.163493280028, 8821.185140675685),
    (1.5, 1.0, 1e-06, 0.0, -3.1771024671419292, -1.3100572087818045, 1965085.813171916, -4765653.700712362),
    (1.5, -1.0, 0.5, 0.0, -1.281567928284537, 3.2612782509930773, 9.310144427679758, 3.954311186753208),
    (1.5, 1.0, 2.0, 0.0, 4.717936511033381, -1.252386616292376, 2.2759427528140344, 1.273292301757002),
    (1.5, -1.0, 5.0, 0.0, 35.33031106668657, 0.05314650475363316, 29.317089592200336, -0.0561831495901177),
    (1.5, 1.0, 10.0, 0.0, 3172.0682043704874, -0.00028285769710061385, 2968.677349266111, 0.0002937582668675817),
    (1.5, -1.0, 25.0, 0.0, 6046135334.720128, 5.871839848868128e-11, 5912590679.304555, -5.977966469531306e-11),
    (1.5, 1.0, 29.5, 0.0, 497068843613.13617, -6.049324126452801e-13, 487903856568.20544, 6.143440997217147e-13),
    (1.5, -1.0, 31.0, 0.0, 2168534167096.6855, 1.3193444155370872e-13, 2130639329254.3535, -1.3389599074370024e-13),
    (1.5, 1.0, 36.0, 0.0, 296932676495237.7, -8.294283926688922e-16, 292513756195386.06, 8.401692397690711e-16),
    (1.5, -1.0, 45.0, 0.0, 2.1367695408368087e+18, 9.217600221408273e-20, 2.1116778828448174e+18, -9.314448917319617e-20),
    (1.5, 1.0, 0.0, 8.0, 0.10054656254129374, 0.09706897847547877, 0.09478021335616346, 0.10675849208943007),
    (1.5, -1.0, 0.5, 12.0, 0.7571960973829653, 7.483562029197068, -1.0135790901316872, -7.908443489984035),
    (1.5, 1.0, 0.1, 25.0, 0.05045809340836804, -0.07195047764674743, 0.05125536251959941, -0.07215313449692504),
    (1.5, -1.0, 0.2, 29.0, -6.796648232348471, -0.7062048021607842, 6.639389777211144, 0.6086074709689047),
    (1.5, 1.0, 1.0, 35.0, -0.17152985417720804, 0.06524997003194402, -0.17215645915555303, 0.06300692265690436),
    (1.5, -1.0, 3.0, 2.0, 1.4287832026049916, 5.116993946765906, -1.2864275102918117, 5.539992869713606),
    (1.5, 1.0, 1.0, 1.0, 1.2877535564392149, -0.2744621837415936, 1.6021356875810362, 0.5780413467503978),
    (1.5, -1.0, 10.0, 10.0, -2469.793899949464, -289.5001014396532, -2399.869615686914, -360.29802208553417),
    (1.5, 1.0, 20.0, 5.0, 6749834.556285619, -44767895.499431744, 6902949.187446579, -43543430.41955525),
    (1.5, -1.0, 7.0, 24.0, -22.27587827657584, -85.80386870399047, -20.447116581182694, -85.93699583397567),
    (1.5, 1.0, 2.0, 40.0, 0.02868188324051158, 0.4653850612551259, 0.02283929883880436, 0.46596811702923496),
    (1.5, -1.0, 15.0, 3.0, -350293.5851181623, 92251.98736571282, -338026.5325465698, 85761.29917724391),
    (1.5, 1.0, 0.3, -18.0, -1.1075610338567425, -7.526882419925426, 0.8740675018930101, 7.842131895939588),
    (1.5, -1.0, 12.0, -6.0, 16360.19410117953, 10254.120441323399, 15979.82620599487, 9495.651426886145),
    (2.0, 1.0, 1e-06, 0.0, -4.196209505622339, 5.00047489336488, -10000949.786729181, -8392419.01124334),
    (2.0, -1.0, 0.5, 0.0, -6.4595404378048515, 1.4063985380291348, 5.155159755753022, 25.26518502740998),
    (2.0, 1.0, 2.0, 0.0, 7.161099217576451, -4.09066941296885, 4.462938504075013, 3.401226069299729),
    (2.0, -1.0, 5.0, 0.0, 43.53942021353525, 0.21728033706987457, 33.76402223670052, -0.2229912839825584),
    (2.0, 1.0, 10.0, 0.0, 3481.627923898198, -0.0012512886628484494, 3223.4150598133656, 0.0012893859002092915),
    (2.0, -1.0, 25.0, 0.0, 6266293163.821963, 2.7294547526769496e-10, 6118710855.906441, -2.775100656618276e-10),
    (2.0, 1.0, 29.5, 0.0, 512310878432.3763, -2.826510933559321e-12, 502330178958.87805, 2.867731436032447e-12),
    (2.0, -1.0, 31.0, 0.0, 2231705880789.6978, 6.1731476114167e-13, 2190602092684.3152, -6.259471139441779e-13),
    (2.0, 1.0, 36.0, 0.0, 304347419780572.0, -3.895680262332227e-15, 299606411550506.2, 3.943565050829915e-15),
    (2.0, -1.0, 45.0, 0.0, 2.179218618868319e+18, 4.349953105217768e-19, 2.1526643349512097e+18, -4.393817152626565e-19),
    (2.0, 1.0, 0.0, 8.0, 0.1091106825302844, 0.08595556011469804, 0.10713678733394717, 0.09545084119000803),
    (2.0, -1.0, 0.5, 12.0, 0.8601784634619069, 36.654270003222365, -2.2876609218119315, -37.59233631818732),
    (2.0, 1.0, 0.1, 25.0, 0.04757455853574376, -0.07403598525533035, 0.04905992280706802, -0.0735624452181943),
    (2.0, -1.0, 0.2, 29.0, -32.21030881795995, -4.395694772795107, 32.19069754385415, 3.879259738552468),
    (2.0, 1.0, 1.0, 35.0, -0.16974188968234008, 0.06959981343623507, -0.1708788286807094, 0.06729815862030705),
    (2.0, -1.0, 3.0, 2.0, 5.233593496084141, 4.991593156780252, -3.391273184488666, 7.71593674687937),
    (2.0, 1.0, 1.0, 1.0, 1.2316722313911026, -1.0890707509581852, 2.573422110721472, -0.2715212618326386),
    (2.0, -1.0, 10.0, 10.0, -2590.6960834721194, -183.0127427446837, -2521.087006893859, -272.15998330902795),
    (2.0, 1.0, 20.0, 5.0, 6532975.344149487, -46769873.78260525, 6743303.571926721, -45398742.54025273),
    (2.0, -1.0, 7.0, 24.0, -25.4224958356684, -85.75666164673234, -23.519647298395782, -86.12649400288275),
    (2.0, 1.0, 2.0, 40.0, 0.038862156552440755, 0.4650888546168868, 0.03303980420647686, 0.46593324043050477),
    (2.0, -1.0, 15.0, 3.0, -370022.89014958346, 102258.31400747751, -355904.73755308567, 94244.17683038305),
    (2.0, 1.0, 0.3, -18.0, -7.0335116967578175, -36.313416951250886, 6.050663210554246, 37.00836789941917),
    (2.0, -1.0, 12.0, -6.0, 17016.644503392927, 11429.047352484522, 16638.10487348182, 10503.993928106232),
    (3.0, 1.0, 1e-06, 0.0, 21.204357459096876, -14.414317686253147, 43242953.05875834, 63613072.37728673),
    (3.0, -1.0, 0.5, 0.0, 12.789342886384507, -22.40909212298967, -132.44570551878834, -76.34449792214953),
    (3.0, 1.0, 2.0, 0.0, 6.100765202301572, -28.080149914939486, 34.319761223135146, 3.670351748830264),
    (3.0, -1.0, 5.0, 0.0, 81.58784199117105, 3.134016018745539, 49.66927614041601, -2.926589120108021),
    (3.0, 1.0, 10.0, 0.0, 4552.739399424248, -0.02275931535214442, 4080.750744258539, 0.02291897178106086),
    (3.0, -1.0, 25.0, 0.0, 6941207820.466253, 5.725191965315788e-09, 6748602393.876501, -5.798794156888711e-09),
    (3.0, 1.0, 29.5, 0.0, 558518361266.6108, -6.017059270984852e-11, 545968392049.4551, 6.088022584579279e-11),
    (3.0, -1.0, 31.0, 0.0, 2422647954501.7495, 1.319382787234953e-11, 2371485611439.234, -1.3344953151380153e-11),
    (3.0, 1.0, 36.0, 0.0, 326579272854913.4, -8.417542667321675e-14, 320841846682294.25, 8.50516666878239e-14),
    (3.0, -1.0, 45.0, 0.0, 2.3052440108010604e+18, 9.527626074660517e-18, 2.274237430978476e+18, -9.612173240537305e-18),
    (3.0, 1.0, 0.0, 8.0, 0.1275322065111746, 0.048521375650525715, 0.13360331043283818, 0.0588532938719013),
    (3.0, -1.0, 0.5, 12.0, -151.93508581362053, 824.7280795548508, 126.65094875928777, -857.5811490640285),
    (3.0, 1.0, 0.1, 25.0, 0.039821299399063155, -0.07838288622060373, 0.041655363420529716, -0.07817668493419706),
    (3.0, -1.0, 0.2, 29.0, -730.364069134664, -165.10999629713265, 737.0720508432556, 153.67117339356665),
    (3.0, 1.0, 1.0, 35.0, -0.16447554752652252, 0.08161889157491549, -0.16619782826665114, 0.07952921949766116),
    (3.0, -1.0, 3.0, 2.0, 56.04194836326626, 3.199693369272134, -44.12975346765375, 5.430162890438097),
    (3.0, 1.0, 1.0, 1.0, -1.2777643871392113, -2.507770232035484, 1.3645575713183007, -6.051922041114361),
    (3.0, -1.0, 10.0, 10.0, -2933.5400146723355, 181.1190470254066, -2873.907869887986, 32.70232151549136),
    (3.0, 1.0, 20.0, 5.0, 5722698.103326845, -52969708.500149265, 6137370.872979481, -51125276.44339506),
    (3.0, -1.0, 7.0, 24.0, -34.99683442337781, -84.45302783385117, -32.023577062065684, -86.67484877649972),
    (3.0, 1.0, 2.0, 40.0, 0.06792778116002636, 0.4628583358598523, 0.062209220172379974, 0.4647625282426348),
    (3.0, -1.0, 15.0, 3.0, -432482.86071089824, 135942.28097033378, -412194.6733937198, 122416.34672209884),
    (3.0, 1.0, 0.3, -18.0, -275.11769412176676, -807.8398518078931, 257.59433559027764, 827.1219647604626),
    (3.0, -1.0, 12.0, -6.0, 18874.706663240308, 15336.830614966866, 18563.053767196096, 13838.53068129925),
];

/// (lambda, z_re, z_im, k_re, k_im, dk_re, dk_im); order = i*lambda.
pub const BESSEL_K_REF: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.5, 0.5, 0.0, 0.7917343054126181, 0.0, -1.2428736879720423, 0.0),
    (0.5, 5.0, 0.0, 0.003607427131326171, 0.0, -0.003937639372618867, 0.0),
    (0.5, 15.0, 0.0, 9.74056924527583e-08, 0.0, -1.0055084966171803e-07, 0.0),
    (0.5, 40.0, 0.0, 8.366992348116498e-19, 0.0, -8.4703038328044605e-19, 0.0),
    (0.5, 20.0, 2.0, -2.6179866606489264e-10, -5.055098935882078e-10, 2.6932066184003975e-10, 5.171116254586211e-10),
    (0.5, 0.5, 20.0, -0.05665621863813003, -0.16011977877794248, 0.06071727270935829, 0.15890689322430632),
    (0.5, 23.0, 8.0, -7.87864455817738e-12, -2.4583950816433717e-11, 8.188630597437924e-12, 2.5001609985622893e-11),
    (0.8, 0.5, 0.0, 0.6161761976886331, 0.0, -0.7331079767646759, 0.0),
    (0.8, 5.0, 0.0, 0.0034804919641606242, 0.0, -0.003775979495705314, 0.0),
    (0.8, 15.0, 0.0, 9.618621824961857e-08, 0.0, -9.921360253132236e-08, 0.0),
    (0.8, 40.0, 0.0, 8.326794956692422e-19, 0.0, -8.428619539637694e-19, 0.0),
    (0.8, 20.0, 2.0, -2.58879973628466e-10, -5.010041288361143e-10, 2.6615904691162864e-10, 5.123004856483505e-10),
    (0.8, 0.5, 20.0, -0.055070987504447375, -0.16058492419114967, 0.05916050742848136, 0.15949227410081365),
    (0.8, 23.0, 8.0, -7.758368893117666e-12, -2.442150533890472e-11, 8.058331932846677e-12, 2.483222365777655e-11),
    (1.0, 0.05, 0.0, -0.12703350771091382, 0.0, 10.112594554512336, 0.0),
    (1.0, 0.5, 0.0, 0.48339609004387796, 0.0, -0.3833517678165185, 0.0),
    (1.0, 2.0, 0.0, 0.09238545989039118, 0.0, -0.10507147693246792, 0.0),
    (1.0, 4.4, 0.0, 0.0064469264739714155, 0.0, -0.007005687152120965, 0.0),
    (1.0, 5.0, 0.0, 0.003367099988561045, 0.0, -0.003632228513085664, 0.0),
    (1.0, 8.0, 0.0, 0.0001380656046471576, 0.0, -0.00014548511092270038, 0.0),
    (1.0, 10.0, 0.0, 1.6950735948481493e-05, 0.0, -1.7701358059356587e-05, 0.0),
    (1.0, 15.0, 0.0, 9.507384078487453e-08, 0.0, -9.799463441209219e-08, 0.0),
    (1.0, 19.0, 0.0, 1.5601127962101097e-09, 0.0, -1.598597427797235e-09, 0.0),
    (1.0, 26.0, 0.0, 1.226504029708153e-12, 0.0, -1.2489974952171987e-12, 0.0),
    (1.0, 40.0, 0.0, 8.289859745737482e-19, 0.0, -8.390322254381278e-19, 0.0),
    (1.0, 12.0, 3.0, -2.087308892737045e-06, -6.370621124984943e-08, 2.162615874762988e-06, 4.914475382078036e-08),
    (1.0, 18.0, -4.0, -2.465742436744347e-09, -3.5275545205773325e-09, 2.5088913839619647e-09, 3.628033565356264e-09),
    (1.0, 20.0, 2.0, -2.5621330348757203e-10, -4.968796533282899e-10, 2.6327184049274853e-10, 5.078979635401249e-10),
    (1.0, 6.0, 6.0, 0.0010108031379295187, -6.209014346431586e-05, -0.0010502782998436933, 9.868933315871781e-05),
    (1.0, 3.0, 15.0, -0.015779176667034305, -0.0009595303330530418, 0.015947148923000462, 0.0004804440330258174),
    (1.0, 0.5, 20.0, -0.05360466561713808, -0.16100038210258588, 0.0577187111569682, 0.1600189917091084),
    (1.0, 1.0, -9.0, -0.14725750207398575, -0.03571714133957249, 0.1473165446806416, 0.04391857281622235),
    (1.0, 9.0, 12.0, 3.8585368532445355e-05, 5.23177363188387e-06, -3.950705260969648e-05, -4.410756135497109e-06),
    (1.0, 23.0, 8.0, -7.648482809737947e-12, -2.4272350913196433e-11, 7.939327138331837e-12, 2.4676701168586464e-11),
    (1.5, 0.05, 0.0, -0.15348466789951443, 0.0, -3.5607360302756557, 0.0),
    (1.5, 4.4, 0.0, 0.005660700912885573, 0.0, -0.005995613769191325, 0.0),
    (1.5, 10.0, 0.0, 1.5966818464528945e-05, 0.0, -1.6582136415615845e-05, 0.0),
    (1.5, 26.0, 0.0, 1.1978938565098152e-12, 0.0, -1.2187940877171424e-12, 0.0),
    (1.5, 18.0, -4.0, -2.411209800935709e-09, -3.398573580521547e-09, 2.4522928660577484e-09, 3.488394216645663e-09),
    (1.5, 3.0, 15.0, -0.015585707093842079, -0.0015666638691066933, 0.0158056081659637, 0.0011204963115247419),
    (1.5, 9.0, 12.0, 3.7439865289783366e-05, 6.304644690558402e-06, -3.837096516527671e-05, -5.634264488304038e-06),
    (2.0, 0.5, 0.0, 0.01650201894948144, 0.0, 0.29644979770011487, 0.0),
    (2.0, 5.0, 0.0, 0.0025494652779584352, 0.0, -0.0026164748429034173, 0.0),
    (2.0, 15.0, 0.0, 8.62814396452588e-08, 0.0, -8.83890855763064e-08, 0.0),
    (2.0, 40.0, 0.0, 7.988320231031316e-19, 0.0, -8.077814100193755e-19, 0.0),
    (2.0, 20.0, 2.0, -2.3498496387514887e-10, -4.6376966253755926e-10, 2.4033779169793906e-10, 4.726089998535367e-10),
    (2.0, 0.5, 20.0, -0.041288494911803475, -0.1639415013185132, 0.04554145289996531, 0.16389461200048883),
    (2.0, 23.0, 8.0, -6.7740354273691635e-12, -2.3058722559020553e-11, 6.993692487736488e-12, 2.3411462069395588e-11),
    (3.0, 0.05, 0.0, -0.005610585973586815, 0.0, -0.7036396908890328, 0.0),
    (3.0, 4.4, 0.0, 0.0027566675318785035, 0.0, -0.0024806899423632533, 0.0),
    (3.0, 10.0, 0.0, 1.1540111450067397e-05, 0.0, -1.1621065246563824e-05, 0.0),
    (3.0, 26.0, 0.0, 1.0544228709911507e-12, 0.0, -1.067727295441324e-12, 0.0),
    (3.0, 18.0, -4.0, -2.131623148887512e-09, -2.7746458338926515e-09, 2.1615293137700867e-09, 2.8162902462019647e-09),
    (3.0, 3.0, 15.0, -0.014191116026908824, -0.004589280592847623, 0.014636803891025223, 0.00436305617076117),
    (3.0, 9.0, 12.0, 3.124231416887081e-05, 1.1059823841426404e-05, -3.209899009748884e-05, -1.1097927844232383e-05),
];

/// (lambda, mu_re, mu_im, x, t, g_re, g_im) for the kernel
/// sqrt(x t) * (I(mu x) K(mu t) - I(mu t) K(mu x)) with order i*lambda.
pub const GREEN_REF: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (1.0, 2.0, 0.0, 0.5, 0.2, 0.2673455038827033, -4.226012066805483e-52),
    (0.5, 5.0, 3.0, 0.7, 0.3, 0.47502530207206356, 0.3861954664370438),
    (2.0, 0.0, 1.0, 0.4, 0.1, 0.03437344036995539, -6.6819117752304895e-53),
    (1.5, 20.0, 0.0, 0.5, 0.45, 0.058505207681275456, -2.045031515799583e-56),
    (1.0, 0.1, 12.0, 0.9, 0.6, -0.03867985970883288, 0.0018579446422576113),
];

/// (lambda, ratio_re, ratio_im) for Gamma(1 - i lambda) / Gamma(1 + i lambda).
pub const GAMMA_RATIO_REF: &[(f64, f64, f64)] = &[
    (0.5, 0.8832176710073695, 0.4689632668134232),
    (1.0, 0.8234787876439335, 0.5673470598324076),
    (2.0, 0.9665715867403022, -0.2563968948843461),
];
