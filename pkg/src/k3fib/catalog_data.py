"""Printed Weierstrass equations, kept verbatim as expression strings.

Strings use the notation of :mod:`k3fib.expr`.  The long forms are in
the base variable ``s`` for fibrations reached by a neighbor step and in
``t`` otherwise.  Repairs are listed separately so that the printed text
stays untouched and every deviation is visible to the harness.
"""

LONG_FORMS = {
    "1.1": (
        "y^2=x^3-(27s^8-108(ad+bc-2a-2b+c+d+1)s^6+54(3a^2d^2+2abcd+3b^2c^2-8a^2d-16abc-16abd+14ac"
        "d+2ad^2-8b^2c+2bc^2+14bcd+8a^2+24ab-8ac-2ad+8b^2-2bc-8bd+3c^2-6cd+3d^2-8a-8b+2c+2d+3)s^4"
        "-108(a^3d^3-a^2bcd^2-ab^2c^2d+b^3c^3-2a^3d^2-10a^2bcd-4a^2bd^2+5a^2cd^2-a^2d^3-4ab^2c^2-"
        "10ab^2cd+12abc^2d+12abcd^2-2b^3c^2-b^2c^3+5b^2c^2d+16a^2bc+18a^2bd-8a^2cd-5a^2d^2+18ab^2"
        "c+16ab^2d-10abc^2-18abcd-10abd^2+5ac^2d-2acd^2-ad^3-5b^2c^2-8b^2cd-bc^3-2bc^2d+5bcd^2-16"
        "a^2b+8a^2d-16ab^2-4abc-4abd-2ac^2+8ad^2+8b^2c+8bc^2-2bd^2+c^3-3c^2d-3cd^2+d^3+14ab+4ac-5"
        "ad-5bc+4bd-c^2+4cd-d^2-2a-2b-c-d+1)s^2+27(a^2d^2-2abcd+b^2c^2+4abc+4abd-2acd-2ad^2-2bc^2"
        "-2bcd-4ab+2ad+2bc+c^2+2cd+d^2-2c-2d+1)^2)x+(54s^12-324(ad+bc-2a-2b+c+d+1)s^10+162(5a^2d^"
        "2+6abcd+5b^2c^2-16a^2d-24ac-24abd+18acd+6ad^2-16b^2c+6bc^2+18bcd+16a^2+40ab-16ac-6ad+16b"
        "^2-6bc-16bd+5c^2-2cd+5d^2-16a-16b+6c+6d+5)s^8-216(5a^3d^3+3a^2bcd^2+3ab^2c^2d+5b^3c^3-18"
        "a^3d^2-45a^2bcd-33a^2bd^2+30a^2cd^2+3a^2d^3-33ab^2c^2-45ab^2cd+39abc^2d+39abcd^2-18b^3c^"
        "2+3b^2c^3+30b^2c^2d+24a^3d+72a^2bc+111a^2bd-66a^2cd-15a^2d^2+111ab^2c+72ab^2d-45abc^2-14"
        "4abcd-45abd^2+30ac^2d+6acd^2+3ad^3+24b^3c-15b^2c^2-66b^2cd+3bc^3+6bc^2d+30bcd^2-16a^3-96"
        "a^2b+24a^2c+6a^2d-96ab^2+12abc+12abd-18ac^2+33acd+6ad^2-16b^3+6b^2c+24b^2d+6bc^2+33bcd-1"
        "8bd^2+5c^3-12c^2d-12cd^2+5d^3+24a^2+81ab-12ac-15ad+24b^2-15bc-12bd+3c^2-3cd+3d^2-18a-18b"
        "+3c+3d+5)s^6+162(5a^4d^4-4a^3bcd^3-2a^2b^2c^2d^2-4ab^3c^3d+5b^4c^4-16a^4d^3-44a^3bcd^2-2"
        "8a^3bd^3+32a^3cd^3-4a^3d^4-40a^2b^2c^2d-40a^2b^2cd^2+44a^2bc^2d^2+56a^2bcd^3-28ab^3c^3-4"
        "4ab^3c^2d+56ab^2c^3d+44ab^2c^2d^2-16b^4c^3-4b^3c^4+32b^3c^3d+16a^4d^2+144a^3bcd+124a^3bd"
        "^2-80a^3cd^2-12a^3d^3+136a^2b^2c^2+376a^2b^2cd+136a^2b^2d^2-296a^2bc^2d-372a^2bcd^2-40a^"
        "2bd^3+94a^2c^2d^2-16a^2cd^3-2a^2d^4+124ab^3c^2+144ab^3cd-40ab^2c^3-372ab^2c^2d-296ab^2cd"
        "^2+44abc^3d+208abc^2d^2+44abcd^3+16b^4c^2-12b^3c^3-80b^3c^2d-2b^2c^4-16b^2c^3d+94b^2c^2d"
        "^2-128a^3bc-208a^3bd+64a^3cd+64a^3d^2-416a^2b^2c-416a^2b^2d+144a^2bc^2+400a^2bcd+144a^2b"
        "d^2-80a^2c^2d-4a^2cd^2+4a^2d^3-208ab^3c-128ab^3d+144ab^2c^2+400ab^2cd+144ab^2d^2-44abc^3"
        "+44abc^2d+44abcd^2-44abd^3+32ac^3d-108ac^2d^2-4ad^4+64b^3c^2+64b^3cd+4b^2c^3-4b^2c^2d-80"
        "b^2cd^2-4bc^4-108bc^2d^2+32bcd^3+128a^3b-64a^3d+296a^2b^2+32a^2bc+40a^2bd+16a^2c^2+16a^2"
        "cd-66a^2d^2+128ab^3+40ab^2c+32ab^2d-76abc^2-212abcd-76abd^2-16ac^3+20ac^2d+40acd^2+28ad^"
        "3-64b^3c-66b^2c^2+16b^2cd+16b^2d^2+28bc^3+40bc^2d+20bcd^2-16bd^3+5c^4-16c^3d+30c^2d^2-16"
        "cd^3+5d^4-176a^2b-32a^2c+64a^2d-176ab^2+28abc+28abd+16ac^2-40acd+4ad^2+64b^2c-32b^2d+4bc"
        "^2-40bcd+16bd^2-4c^3+12c^2d+12cd^2-4d^3+16a^2+92ab+16ac-12ad+16b^2-12bc+16bd-2c^2+8cd-2d"
        "^2-16a-16b-4c-4d+5)s^4-324(a^5d^5-3a^4bcd^4+2a^3b^2c^2d^3+2a^2b^3c^3d^2-3ab^4c^4d+b^5c^5"
        "-2a^5d^4-2a^4bcd^3+3a^4cd^4-3a^4d^5+10a^3b^2c^2d^2-6a^3b^2cd^3+2a^3bc^2d^3+14a^3bcd^4-6a"
        "^2b^3c^3d+10a^2b^3c^2d^2-16a^2b^2c^3d^2-16a^2b^2c^2d^3-2ab^4c^3d+14ab^3c^4d+2ab^3c^3d^2-"
        "2b^5c^4-3b^4c^5+3b^4c^4d+8a^4bcd^2+6a^4bd^3-4a^4cd^3+a^4d^4+72a^3b^2c^2d+74a^3b^2cd^2-94"
        "a^3bc^2d^2-104a^3bcd^3-6a^3bd^4-4a^3c^2d^3-8a^3cd^4+2a^3d^5+74a^2b^3c^2d+72a^2b^3cd^2-56"
        "a^2b^2c^3d-114a^2b^2c^2d^2-56a^2b^2cd^3+98a^2bc^3d^2+88a^2bc^2d^3-16a^2bcd^4+6ab^4c^3+8a"
        "b^4c^2d-6ab^3c^4-104ab^3c^3d-94ab^3c^2d^2-16ab^2c^4d+88ab^2c^3d^2+98ab^2c^2d^3+b^4c^4-4b"
        "^4c^3d+2b^3c^5-8b^3c^4d-4b^3c^3d^2-8a^4bd^2+4a^4d^3-80a^3b^2c^2-224a^3b^2cd-72a^3b^2d^2+"
        "80a^3bc^2d+248a^3bcd^2+80a^3bd^3+12a^3c^2d^2+30a^3cd^3+12a^3d^4-72a^2b^3c^2-224a^2b^3cd-"
        "80a^2b^3d^2+72a^2b^2c^3+156a^2b^2c^2d+156a^2b^2cd^2+72a^2b^2d^3-94a^2bc^3d-174a^2bc^2d^2"
        "+44a^2bcd^3+10a^2bd^4-4a^2c^3d^2+6a^2cd^4+2a^2d^5-8ab^4c^2+80ab^3c^3+248ab^3c^2d+80ab^3c"
        "d^2+10ab^2c^4+44ab^2c^3d-174ab^2c^2d^2-94ab^2cd^3+2abc^4d-102abc^3d^2-102abc^2d^3+2abcd^"
        "4+4b^4c^3+12b^3c^4+30b^3c^3d+12b^3c^2d^2+2b^2c^5+6b^2c^4d-4b^2c^2d^3+160a^3b^2c+152a^3b^"
        "2d-160a^3bcd-154a^3bd^2-24a^3cd^2-26a^3d^3+152a^2b^3c+160a^2b^3d-56a^2b^2c^2+4a^2b^2cd-5"
        "6a^2b^2d^2+8a^2bc^3+134a^2bc^2d-66a^2bcd^2-90a^2bd^3-4a^2c^3d-18a^2c^2d^2-42a^2cd^3-22a^"
        "2d^4-154ab^3c^2-160ab^3cd-90ab^2c^3-66ab^2c^2d+134ab^2cd^2+8ab^2d^3-2abc^4+72abc^3d+256a"
        "bc^2d^2+72abcd^3-2abd^4+3ac^4d+12ac^3d^2+12ac^2d^3-3ad^5-26b^3c^3-24b^3c^2d-22b^2c^4-42b"
        "^2c^3d-18b^2c^2d^2-4b^2cd^3-3bc^5+12bc^3d^2+12bc^2d^3+3bcd^4-80a^3b^2+80a^3bd+12a^3d^2-8"
        "0a^2b^3-104a^2b^2c-104a^2b^2d-24a^2bc^2+14a^2bcd+142a^2bd^2+12a^2c^2d+48a^2cd^2+42a^2d^3"
        "+80ab^3c+142ab^2c^2+14ab^2cd-24ab^2d^2-4abc^3-178abc^2d-178abcd^2-4abd^3-2ac^4-10ac^3d-1"
        "2ac^2d^2+10acd^3+14ad^4+12b^3c^2+42b^2c^3+48b^2c^2d+12b^2cd^2+14bc^4+10bc^3d-12bc^2d^2-1"
        "0bcd^3-2bd^4+c^5-c^4d-8c^3d^2-8c^2d^3-cd^4+d^5+88a^2b^2+24a^2bc-54a^2bd-12a^2cd-26a^2d^2"
        "-54ab^2c+24ab^2d+24abc^2+132abcd+24abd^2+8ac^3+12ac^2d-12acd^2-22ad^3-26b^2c^2-12b^2cd-2"
        "2bc^3-12bc^2d+12bcd^2+8bd^3-3c^4+6c^3d+18c^2d^2+6cd^3-3d^4-8a^2b+4a^2d-8ab^2-28abc-28abd"
        "-12ac^2-6acd+12ad^2+4b^2c+12bc^2-6bcd-12bd^2+2c^3-12c^2d-12cd^2+2d^3+10ab+8ac+ad+bc+8bd+"
        "2c^2+10cd+2d^2-2a-2b-3c-3d+1)s^2+54(a^2d^2-2abcd+b^2c^2+4abc+4abd-2acd-2ad^2-2bc^2-2bcd-"
        "4ab+2ad+2bc+c^2+2cd+d^2-2c-2d+1)^3)"
    ),
    "1.2": (
        "y^2=x^3-(27(ad-bc)^4t^8-108(a^3d^3-a^2bcd^2-ab^2c^2d+b^3c^3-2a^3d^2-2a^2bcd+4a^2bd^2+4a^"
        "2cd^2-2a^2d^3+4ab^2c^2-2ab^2cd-2abc^2d-2abcd^2-2b^3c^2-2b^2c^3+4b^2c^2d-6a^2bd+4a^2d^2-6"
        "ab^2c+16abcd-6acd^2+4b^2c^2-6bc^2d)t^6+54(3a^2d^2+2abcd+3b^2c^2-8a^2d+4abc+4abd+4acd-8ad"
        "^2-8b^2c-8bc^2+4bcd+8a^2+4ab-8ac+8ad+8b^2+8bc-8bd+8c^2+4cd+8d^2-8a-8b-8c-8d+8)t^4-108(ad"
        "+bc-2a-2b-2c-2d+4)t^2+27)x+(54(ad-bc)^6t^12-324(a^3d^3-a^2bcd^2-ab^2c^2d+b^3c^3-2a^3d^2-"
        "2a^2bcd+4a^2bd^2+4a^2cd^2-2a^2d^3+4ab^2c^2-2ab^2cd-2abc^2d-2abcd^2-2b^3c^2-2b^2c^3+4b^2c"
        "^2d-6a^2bd+4a^2d^2-6ab^2c+16abcd-6acd^2+4b^2c^2-6bc^2d)(ad-bc)^2t^10+162(5a^4d^4-4a^3bcd"
        "^3-2a^2b^2c^2d^2-4ab^3c^3d+5b^4c^4-16a^4d^3+4a^3bcd^2+20a^3bd^3+20a^3cd^3-16a^3d^4-8a^2b"
        "^2c^2d-8a^2b^2cd^2-8a^2bc^2d^2+4a^2bcd^3+20ab^3c^3+4ab^3c^2d+4ab^2c^3d-8ab^2c^2d^2-16b^4"
        "c^3-16b^3c^4+20b^3c^3d+16a^4d^2+16a^3bcd-52a^3bd^2-40a^3cd^2+40a^3d^3+40a^2b^2c^2+152a^2"
        "b^2cd+40a^2b^2d^2-64a^2bc^2d-88a^2bcd^2-40a^2bd^3+40a^2c^2d^2-52a^2cd^3+16a^2d^4-52ab^3c"
        "^2+16ab^3cd-40ab^2c^3-88ab^2c^2d-64ab^2cd^2+16abc^3d+152abc^2d^2+16abcd^3+16b^4c^2+40b^3"
        "c^3-40b^3c^2d+16b^2c^4-52b^2c^3d+40b^2c^2d^2+48a^3bd-40a^3d^2-96a^2b^2c-96a^2b^2d-16a^2b"
        "cd+104a^2bd^2+104a^2cd^2-40a^2d^3+48ab^3c+104ab^2c^2-16ab^2cd-16abc^2d-16abcd^2-96ac^2d^"
        "2+48acd^3-40b^3c^2-40b^2c^3+104b^2c^2d+48bc^3d-96bc^2d^2+72a^2b^2-96a^2bd+40a^2d^2-96ab^"
        "2c+160abcd-96acd^2+40b^2c^2-96bc^2d+72c^2d^2)t^8-216(5a^3d^3+3a^2bcd^2+3ab^2c^2d+5b^3c^3"
        "-18a^3d^2-3a^2bcd+9a^2bd^2+9a^2cd^2-18a^2d^3+9ab^2c^2-3ab^2cd-3abc^2d-3abcd^2-18b^3c^2-1"
        "8b^2c^3+9b^2c^2d+24a^3d-12a^2bc-15a^2bd-24a^2cd+48a^2d^2-15ab^2c-12ab^2d-24abc^2-60abcd-"
        "24abd^2-12ac^2d-15acd^2+24ad^3+24b^3c+48b^2c^2-24b^2cd+24bc^3-15bc^2d-12bcd^2-16a^3-12a^"
        "2b+24a^2c-36a^2d-12ab^2+96abc+96abd+24ac^2+96acd-36ad^2-16b^3-36b^2c+24b^2d-36bc^2+96bcd"
        "+24bd^2-16c^3-12c^2d-12cd^2-16d^3+24a^2-24ab-96ac-36ad+24b^2-36bc-96bd+24c^2-24cd+24d^2+"
        "24a+24b+24c+24d-16)t^6+162(5a^2d^2+6abcd+5b^2c^2-16a^2d-4abc-4abd-4acd-16ad^2-16b^2c-16b"
        "c^2-4bcd+16a^2+20ab+8ac+40ad+16b^2+40bc+8bd+16c^2+20cd+16d^2-40a-40b-40c-40d+40)t^4-324("
        "ad+bc-2a-2b-2c-2d+4)t^2+54)"
    ),
    "1.3": (
        "y^2=x^3-(27t^8+(216bc+216+216ad+648ac-432c-108b-108d-432a)t^6+(432-432a-432d-432b-432c+4"
        "32bc+432ad+108bd-432ad^2-432b^2c+432a^2+432d^2a^2-432da^2+216abc432ac+216cd+216bcd+216ab"
        "d+216ab-432bc^2+432b^2c^2+432c^2+162d^2+162b^2-432abcd+216acd)t^4-108(b-d)(b^2-2b^2c-2b+"
        "4bc+4abd-2ab-4bcd-4ad+2cd+2d+2ad^2-d^2)t^2+27(b-d)^4)x+(54t^12+(1944ac+648bc+648ad-324b-"
        "324d-1296a+648-1296c)t^10+(2592-6480a-2592d-2592b-6480c-15552a^2c+7776abc^2+6480bc+6480a"
        "d+972bd-2592ad^2-2592b^2c+6480a^2+2592a^2d^2-6480a^2d-8424abc-15552ac^2+11664a^2c^2+1684"
        "8ac+3240cd-648bcd-648abd+3240ba-6480bc^2+2592b^2c^2+6480c^2+810d^2+810b^2+1296abcd-8424a"
        "cd+7776a^2cd)t^8+(3456-5184a-5184d-5184b-5184c+2592a^2bc+2592ab^2c^2-5184a^2c+5184abc^2+"
        "7776bc+7776ad+2592bd+2592a^2b-10368ad^2-10368b^2c-1944cd^2+3888ad^3+3888b^3c-648bd^2-648"
        "b^2d+3240ab^2c-5184a^2+3456a^3+7776a^2d^2-5184a^3d^2-5184a^3d-10368bc^2d+7776a^2d+2592b^"
        "2c^2d+2592a^2bd^2+5184ab^2cd+5184abcd^2-5184ab^2c^2d-5184a^2bcd^2+5184abc^2d+5184a^2bcd-"
        "20736cba-5184ac^2-5184b^3c^2+3456a^3d^3-5184a^2d^3+3456b^3c^3-5184b^2c^3-5184bc^3+20736a"
        "c+2592c^2d+5184cd-10368a^2bd+1944bcd+1944abd+5184ab+7776c^2b+7776c^2b^2-5184c^2+3888d^2+"
        "3888b^2+3456c^3-1080b^3-1080d^3+3888abcd+2592ac^2d-20736acd+2592a^2cd^2+3240d^2ac+5184a^"
        "2cd-1944ab^2+648b^2cd+648abd^2-1944bcd^2-1944ab^2d)t^6+(2592b^4c^2-2592ad^4+2592a^2d^4-2"
        "592b^4c-5184bd-324b^2d^2-6480ad^2-6480b^2c+1296cd^2+6480ad^3+6480b^3c+2592bd^2+2592b^2d-"
        "6480ab^2c-648bd^3-648b^3d+6480d^2a^2+2592bc^2d-10368b^2c^2d-10368a^2bd^2+20088ab^2cd+200"
        "88abcd^2-10368ab^2cd^2-6480b^3c^2+2592a^2b^2-648ab^3-6480a^2d^3+2592c^2d^2-648cd^3-6480b"
        "c^2d^2+3240ab^3c-6480a^2b^2d+3240ab^3d-1296ab^2d^2+648abd^3+648b^3cd-1296b^2cd^2+3240bcd"
        "^3+2592b^3c^2d+2592a^2bd^3+3240acd^3+6480b^2c^2d^2+6480a^2b^2d^2+2592a^2bd+5184bcd+5184a"
        "bd+6480c^2b^2-6480abcd^3-6480ab^3cd+2592d^2+2592b^2+810b^4-2592b^3-2592d^3+810d^4-10368a"
        "bcd-6480acd^2+1296ab^2+1944b^2cd+1944abd^2-7776bcd^2-7776ab^2d)t^4-324(b-d)^3(b^2-2b^2c-"
        "2b+4bc+4abd-2ab-4bcd-4ad+2cd+2d+2ad^2-d^2)t^2+54(b-d)^6)"
    ),
    "1.4": (
        "y^2=x^3-(216(2a^2d^2-2abcd+2b^2c^2-2a^2d+abc+abd+acd-2ad^2-2b^2c-2bc^2+bcd+2a^2+ab-2ac+2"
        "ad+2b^2+2bc-2bd+2c^2+cd+2d^2-2a-2b-2c-2d+2)s^4-216(2a^3b^2c^2d+a^3b^2cd^2-a^3b^2d^3-a^3b"
        "c^2d^2-4a^3bcd^3-a^3c^2d^3-a^2b^3c^3+a^2b^3c^2d+2a^2b^3cd^2-a^2b^2c^3d+4a^2b^2c^2d^2-a^2"
        "b^2cd^3+2a^2bc^3d^2+a^2bc^2d^3-4ab^3c^3d-ab^3c^2d^2+ab^2c^3d^2+2ab^2c^2d^3-b^3c^3d^2-a^3"
        "b^2c^2-3a^3b^2cd+a^3b^2d^2-a^3bc^2d+6a^3bcd^2+3a^3bd^3+2a^3c^2d^2+3a^3cd^3+a^2b^3c^2-3a^"
        "2b^3cd-a^2b^3d^2+2a^2b^2c^3-7a^2b^2c^2d-7a^2b^2cd^2+2a^2b^2d^3-a^2bc^3d-7a^2bc^2d^2+6a^2"
        "bcd^3-a^2c^3d^2+a^2c^2d^3+3ab^3c^3+6ab^3c^2d-ab^3cd^2+6ab^2c^3d-7ab^2c^2d^2-ab^2cd^3-3ab"
        "c^3d^2-3abc^2d^3+3b^3c^3d+2b^3c^2d^2+b^2c^3d^2-b^2c^2d^3+2a^3b^2c+a^3b^2d-2a^3bcd-6a^3bd"
        "^2-3a^3cd^2+a^2b^3c+2a^2b^3d-2a^2b^2c^2+10a^2b^2cd-2a^2b^2d^2+10a^2bc^2d-3a^2bd^3-2a^2c^"
        "2d^2-6a^2cd^3-6ab^3c^2-2ab^3cd-3ab^2c^3+10ab^2cd^2-2abc^3d+10abc^2d^2-2abcd^3+2ac^3d^2+a"
        "c^2d^3-3b^3c^2d-6b^2c^3d-2b^2c^2d^2+bc^3d^2+2bc^2d^3-a^3b^2+3a^3bd-a^2b^3-2a^2b^2c-2a^2b"
        "^2d-6a^2bcd+6a^2bd^2+6a^2cd^2+3ab^3c+6ab^2c^2-6ab^2cd-6abc^2d-6abcd^2-2ac^2d^2+3acd^3+6b"
        "^2c^2d+3bc^3d-2bc^2d^2-c^3d^2-c^2d^3+2a^2b^2-3a^2bd-3ab^2c+8abcd-3acd^2-3bc^2d+2c^2d^2)s"
        "^2+27(abc+abd-acd-bcd-ab+cd)^4)x+(11664s^8+864(4a^3d^3-6a^2bcd^2-6ab^2c^2d+4b^3c^3-6a^3d"
        "^2+6a^2bcd+3a^2bd^2+3a^2cd^2-6a^2d^3+3ab^2c^2+6ab^2cd+6abc^2d+6abcd^2-6b^3c^2-6b^2c^3+3b"
        "^2c^2d-6a^3d+3a^2bc-12a^2bd+6a^2cd+9a^2d^2-12ab^2c+3ab^2d+6abc^2+36abcd+6abd^2+3ac^2d-12"
        "acd^2-6ad^3-6b^3c+9b^2c^2+6b^2cd-6bc^3-12bc^2d+3bcd^2+4a^3+3a^2b-6a^2c+9a^2d+3ab^2-24abc"
        "-24abd-6ac^2-24acd+9ad^2+4b^3+9b^2c-6b^2d+9bc^2-24bcd-6bd^2+4c^3+3c^2d+3cd^2+4d^3-6a^2+6"
        "ab+24ac+9ad-6b^2+9bc+24bd-6c^2+6cd-6d^2-6a-6b-6c-6d+4)s^6+648(10a^4b^2c^2d^2-4a^4b^2cd^3"
        "+4a^4b^2d^4+4a^4bc^2d^3+16a^4bcd^4+4a^4c^2d^4-10a^3b^3c^3d+16a^3b^3c^2d^2-10a^3b^3cd^3-1"
        "6a^3b^2c^3d^2-24a^3b^2c^2d^3+4a^3b^2cd^4-10a^3bc^3d^3-4a^3bc^2d^4+4a^2b^4c^4-4a^2b^4c^3d"
        "+10a^2b^4c^2d^2+4a^2b^3c^4d-24a^2b^3c^3d^2-16a^2b^3c^2d^3+10a^2b^2c^4d^2+16a^2b^2c^3d^3+"
        "10a^2b^2c^2d^4+16ab^4c^4d+4ab^4c^3d^2-4ab^3c^4d^2-10ab^3c^3d^3+4b^4c^4d^2-10a^4b^2c^2d-4"
        "a^4b^2cd^2-6a^4b^2d^3-16a^4bc^2d^2-32a^4bcd^3-12a^4bd^4-10a^4c^2d^3-12a^4cd^4+5a^3b^3c^3"
        "-a^3b^3c^2d-a^3b^3cd^2+5a^3b^3d^3+31a^3b^2c^3d+16a^3b^2c^2d^2+39a^3b^2cd^3-10a^3b^2d^4+3"
        "1a^3bc^3d^2+39a^3bc^2d^3-32a^3bcd^4+5a^3c^3d^3-6a^3c^2d^4-6a^2b^4c^3-4a^2b^4c^2d-10a^2b^"
        "4cd^2-10a^2b^3c^4+39a^2b^3c^3d+16a^2b^3c^2d^2+31a^2b^3cd^3-16a^2b^2c^4d+16a^2b^2c^3d^2+1"
        "6a^2b^2c^2d^3-16a^2b^2cd^4-10a^2bc^4d^2-a^2bc^3d^3-4a^2bc^2d^4-12ab^4c^4-32ab^4c^3d-16ab"
        "^4c^2d^2-32ab^3c^4d+39ab^3c^3d^2+31ab^3c^2d^3-4ab^2c^4d^2-ab^2c^3d^3-10ab^2c^2d^4-12b^4c"
        "^4d-10b^4c^3d^2-6b^3c^4d^2+5b^3c^3d^3+4a^4b^2c^2+16a^4b^2cd+4a^4b^2d^2+4a^4bc^2d+8a^4bcd"
        "^2+12a^4bd^3+10a^4c^2d^2+36a^4cd^3+18a^4d^4-5a^3b^3c^2+16a^3b^3cd-5a^3b^3d^2-10a^3b^2c^3"
        "-28a^3b^2c^2d-56a^3b^2cd^2-6a^3b^2d^3-16a^3bc^3d-21a^3bc^2d^2+40a^3bcd^3+36a^3bd^4-10a^3"
        "c^3d^2-6a^3c^2d^3+12a^3cd^4+4a^2b^4c^2+16a^2b^4cd+4a^2b^4d^2-6a^2b^3c^3-56a^2b^3c^2d-28a"
        "^2b^3cd^2-10a^2b^3d^3+10a^2b^2c^4-21a^2b^2c^3d+12a^2b^2c^2d^2-21a^2b^2cd^3+10a^2b^2d^4+4"
        "a^2bc^4d-28a^2bc^3d^2-56a^2bc^2d^3+8a^2bcd^4+4a^2c^4d^2-5a^2c^3d^3+4a^2c^2d^4+12ab^4c^3+"
        "8ab^4c^2d+4ab^4cd^2+36ab^3c^4+40ab^3c^3d-21ab^3c^2d^2-16ab^3cd^3+8ab^2c^4d-56ab^2c^3d^2-"
        "28ab^2c^2d^3+4ab^2cd^4+16abc^4d^2+16abc^3d^3+16abc^2d^4+18b^4c^4+36b^4c^3d+10b^4c^2d^2+1"
        "2b^3c^4d-6b^3c^3d^2-10b^3c^2d^3+4b^2c^4d^2-5b^2c^3d^3+4b^2c^2d^4-8a^4b^2c-6a^4b^2d+8a^4b"
        "cd+12a^4bd^2-24a^4cd^2-36a^4d^3-5a^3b^3c-5a^3b^3d+10a^3b^2c^2+3a^3b^2cd+32a^3b^2d^2+8a^3"
        "bc^2d+20a^3bcd^2-36a^3bd^3+6a^3c^2d^2-36a^3cd^3-36a^3d^4-6a^2b^4c-8a^2b^4d+32a^2b^3c^2+3"
        "a^2b^3cd+10a^2b^3d^2+6a^2b^2c^3+16a^2b^2c^2d+16a^2b^2cd^2+6a^2b^2d^3+8a^2bc^3d+16a^2bc^2"
        "d^2+20a^2bcd^3-24a^2bd^4+10a^2c^3d^2+32a^2c^2d^3+12a^2cd^4+12ab^4c^2+8ab^4cd-36ab^3c^3+2"
        "0ab^3c^2d+8ab^3cd^2-24ab^2c^4+20ab^2c^3d+16ab^2c^2d^2+8ab^2cd^3+8abc^4d+3abc^3d^2+3abc^2"
        "d^3+8abcd^4-8ac^4d^2-5ac^3d^3-6ac^2d^4-36b^4c^3-24b^4c^2d-36b^3c^4-36b^3c^3d+6b^3c^2d^2+"
        "12b^2c^4d+32b^2c^3d^2+10b^2c^2d^3-6bc^4d^2-5bc^3d^3-8bc^2d^4+4a^4b^2-12a^4bd+18a^4d^2+5a"
        "^3b^3+10a^3b^2c-6a^3b^2d-28a^3bcd-36a^3bd^2+24a^3cd^2+72a^3d^3+4a^2b^4-6a^2b^3c+10a^2b^3"
        "d-32a^2b^2c^2+15a^2b^2cd-32a^2b^2d^2+32a^2bc^2d-8a^2bcd^2+24a^2bd^3-32a^2c^2d^2-36a^2cd^"
        "3+18a^2d^4-12ab^4c-36ab^3c^2-28ab^3cd+24ab^2c^3-8ab^2c^2d+32ab^2cd^2-28abc^3d+15abc^2d^2"
        "-28abcd^3+10ac^3d^2-6ac^2d^3-12acd^4+18b^4c^2+72b^3c^3+24b^3c^2d+18b^2c^4-36b^2c^3d-32b^"
        "2c^2d^2-12bc^4d-6bc^3d^2+10bc^2d^3+4c^4d^2+5c^3d^3+4c^2d^4-10a^3b^2+36a^3bd-36a^3d^2-10a"
        "^2b^3+6a^2b^2c+6a^2b^2d-20a^2bcd+24a^2bd^2+24a^2cd^2-36a^2d^3+36ab^3c+24ab^2c^2-20ab^2cd"
        "-20abc^2d-20abcd^2+6ac^2d^2+36acd^3-36b^3c^2-36b^2c^3+24b^2c^2d+36bc^3d+6bc^2d^2-10c^3d^"
        "2-10c^2d^3+10a^2b^2-24a^2bd+18a^2d^2-24ab^2c+40abcd-24acd^2+18b^2c^2-24bc^2d+10c^2d^2)s^"
        "4-648(2a^3b^2c^2d+a^3b^2cd^2-a^3b^2d^3-a^3bc^2d^2-4a^3bcd^3-a^3c^2d^3-a^2b^3c^3+a^2b^3c^"
        "2d+2a^2b^3cd^2-a^2b^2c^3d+4a^2b^2c^2d^2-a^2b^2cd^3+2a^2bc^3d^2+a^2bc^2d^3-4ab^3c^3d-ab^3"
        "c^2d^2+ab^2c^3d^2+2ab^2c^2d^3-b^3c^3d^2-a^3b^2c^2-3a^3b^2cd+a^3b^2d^2-a^3bc^2d+6a^3bcd^2"
        "+3a^3bd^3+2a^3c^2d^2+3a^3cd^3+a^2b^3c^2-3a^2b^3cd-a^2b^3d^2+2a^2b^2c^3-7a^2b^2c^2d-7a^2b"
        "^2cd^2+2a^2b^2d^3-a^2bc^3d-7a^2bc^2d^2+6a^2bcd^3-a^2c^3d^2+a^2c^2d^3+3ab^3c^3+6ab^3c^2d-"
        "ab^3cd^2+6ab^2c^3d-7ab^2c^2d^2-ab^2cd^3-3abc^3d^2-3abc^2d^3+3b^3c^3d+2b^3c^2d^2+b^2c^3d^"
        "2-b^2c^2d^3+2a^3b^2c+a^3b^2d-2a^3bcd-6a^3bd^2-3a^3cd^2+a^2b^3c+2a^2b^3d-2a^2b^2c^2+10a^2"
        "b^2cd-2a^2b^2d^2+10a^2bc^2d-3a^2bd^3-2a^2c^2d^2-6a^2cd^3-6ab^3c^2-2ab^3cd-3ab^2c^3+10ab^"
        "2cd^2-2abc^3d+10abc^2d^2-2abcd^3+2ac^3d^2+ac^2d^3-3b^3c^2d-6b^2c^3d-2b^2c^2d^2+bc^3d^2+2"
        "bc^2d^3-a^3b^2+3a^3bd-a^2b^3-2a^2b^2c-2a^2b^2d-6a^2bcd+6a^2bd^2+6a^2cd^2+3ab^3c+6ab^2c^2"
        "-6ab^2cd-6abc^2d-6abcd^2-2ac^2d^2+3acd^3+6b^2c^2d+3bc^3d-2bc^2d^2-c^3d^2-c^2d^3+2a^2b^2-"
        "3a^2bd-3ab^2c+8abcd-3acd^2-3bc^2d+2c^2d^2)(abc+abd-acd-bcd-ab+cd)^2s^2+54(abc+abd-acd-bc"
        "d-ab+cd)^6)"
    ),
    "2.1": (
        "y^2+(2s^2+4b-4ac-2ad-2-2d+2c+4a-2cb)xy-(4c(a-1)s^4-4(3a^2c^2-a^2d-2acd-c+a^2+c^2+abcd+ad"
        "^2-bc^2+5ac+2a^2cd-4a^2c-3abc-2bcd-a+2abc^2+cd-4ac^2+2bc)s^2+4a(c+d-1+)(1-3a+a^2cd+abcd+"
        "6ac+ad^2-a^2d-3ac^2+2cd+3abc^2-2bcd-4a^2c+2a^2c^2-5abc+b^2c^2-2bad+2ad+2bc-2d-2c-2acd+2a"
        "^2-2bc^2+c^2+d^2+2ab))y=x^3+(2c(1-a)s^2-2a+2a^2cd+2abcd+4ac+2ad^2-2a^2d-2ac^2+4cd+4b^2c+"
        "2abc^2-4bcd-4a^2c+2a^2c^2-2abc-4bad+4bd+4ad-4bc-4b^2-4d+4b-4acd+2a^2)x^2-(4c^2(a-1)^2s^4"
        "-8ac(c+d-1)(a-1)(ac-a-c+cb-d+1)s^2+4a^2(c+d-1)^2(ac-a-c+cb-d+1)^2)x-8(c(1-a)s^2-a+a^2cd+"
        "abcd+2ac+ad^2-a^2d-ac^2+2cd+2b^2c+abc^2-2bcd-2a^2c+a^2c^2-abc-2bad+2bd+2ad-2bc-2b^2-2d+2"
        "b-2acd+a^2)(c^2(a-1)^2s^4-2ac(c+d-1)(a-1)(ac-a-c+cb-d+1)s^2+a^2(c+d-1)^2(ac-a-c+cb-d+1)^"
        "2)"
    ),
    "2.2": (
        "y^2=x^3-9((1-2a-2b+c+bc+d+ad)s^2+(4bc^2b+c^2b^2d-ab^2c^2+ab^2c-4b^2c^2+2b^2c^3-abcd^2-4a"
        "bcd-abc^2d+a^2bcd+ab^2cd+cd^2-cd+2bc^3+2ad-2bc^2+2b^2c-2b^2cd-bcd+bcd^2-ac^2d-acd+2a^2cd"
        "-a^2cd^2+2a^2d^2-2ad^2-2a^2d+c^2d-3abc^2+4abc-ab+abd^2+a^2bd-a^2bd^2)s-bc(c+d-1)(a-c)(ad"
        "-c-bc-d+1)(ad-bc+b-d))x^2+81s(s+acd+ad^2-bc^2-bcd-ad+bc)(s+abd+acd-b^2c-bc^2-ad+b^2+2bc-"
        "bd-cd-b+d+)(s+abcd-bc^2-bcd+bc)(s-a+a^2+c-ac+abc-bc^2+ad-a^2d-cd+acd)x"
    ),
    "2.3": (
        "y^2=x^3+27s^2(3(a-1)s^3+(a+d+b+c+abcd-a^2d^2-b^2c^2-a^2-b^2-c^2-d^2-ad-bc+a^2d+7abc+ad^2"
        "+bc^2+b^2c+7cd+bd-8ab+ac+7abd-8acd-8bcd-1)s^2+(7bc^2d^2-b^3c^2d-2acd^2+9bc^2d+b^3c^2d-2a"
        "^2cd^2+3a^2bd^2+2a^2cd^3-2a^2bd^3+7ac^2d^2-3b^2c^2d^2-5b^2c^2d-3bc^3d-acd^3-3abc^2d^2+3a"
        "b^2c^2d+3abcd^3-a^2bcd^2-8abcd^2+2ab^2cd+3ab^2cd^2-8abc^2d+5abcd-a^2d^3+3a^2d^2+3b^3c^2+"
        "3b^2c^3-2b^3c^3-3b^2c^2-4c^2d^2+ad+bc-2a^2d+4abc-2ac^2d-2abd^3+4ab^2d^2+4ab^2c^2-b^2cd^2"
        "+2a^2cd-a^2bd-7ab^2c-abc^2-7ab^2d-3ad^2+2ad^3+cd^2+cd-3c^2d-b^3c+2c^3d-bc^3-a^2bcd+3ab^2"
        "-3ab-abd^2+6abd+acd-7bcd+7b^2cd-b^3cd)s+(a^2bc^2d^3-a^2b^2c^2d^2-a^2b^2cd^3-a^2b^2d^4-a^"
        "2bcd^4-a^2c^2d^4+2ab^3c^3d+2ab^3c^2d^2+2ab^3cd^3-2ab^2c^3d^2+2ab^2c^2d^3+2abc^3d^3-b^4c^"
        "4-b^4c^3d-b^4c^2d^2+b^3c^4d-b^3c^3d^2-b^2c^4d^2+a^2b^2cd^2+2a^2b^2d^3+a^2bc^2d^2+4a^2bcd"
        "^3+2a^2bd^4+a^2c^2d^3+a^2cd^4-3ab^3c^2d-3ab^3cd^2-3ab^2c^3d-4ab^2c^2d^2-5ab^2cd^3+abc^3d"
        "^2-5abc^2d^3-2ac^3d^3+2b^4c^3+b^4c^2d+2b^3c^4+3b^3c^2d^2-2b^2c^4d+4b^2c^3d^2+2bc^4d^2-a^"
        "2b^2d^2-3a^2bcd^2-4a^2bd^3-a^2c^2d^2-3a^2cd^3-a^2d^4+ab^3cd+5ab^2c^2d+7ab^2cd^2+abc^3d+4"
        "abc^2d^2+4abcd^3+ac^3d^2+3ac^2d^3-b^4c^2-4b^3c^3-b^3c^2d-b^2c^4+3b^2c^3d-4b^2c^2d^2+bc^4"
        "d-5bc^3d^2-c^4d^2+2a^2bd^2+2a^2cd^2+2a^2d^3-2ab^2cd-2abc^2d-5abcd^2-2ac^2d^2-acd^3+2b^3c"
        "^2+2b^2c^3-b^2c^2d-2bc^3d+3bc^2d^2+2c^3d^2-a^2d^2+abcd+acd^2-b^2c^2+bc^2d-c^2d^2))x+27s^"
        "3((18a^2-9a^2d-9abc+18ab-9ac+27ad-18bc-27a+9b+9c-18d+9)s^4+(2a^3d^3-3a^2bcd^2-3ab^2c^2d+"
        "2b^3c^3-3a^3d^2+3a^2bcd-30a^2bd^2+33a^2cd^2-3a^2d^3-30ab^2c^2+3ab^2cd+3abc^2d+66abcd^2-3"
        "b^3c^2-3b^2c^3-30b^2c^2d-3a^3d+33a^2bc+57a^2bd-60a^2cd-27a^2d^2+57ab^2c+33ab^2d+3abc^2-4"
        "5abcd+3abd^2+33ac^2d-69acd^2-3ad^3-3b^3c-27b^2c^2+3b^2cd-3bc^3+57bc^2d-30bcd^2+2a^3-30a^"
        "2b-3a^2c+36a^2d-30ab^2-75abc-75abd-3ac^2+51acd+36ad^2+2b^3+36b^2c-3b^2d+36bc^2-12bcd-3bd"
        "^2+2c^3-30c^2d+33cd^2+2d^3-3a^2+66ab+12ac-27ad-3b^2-27bc+12bd-3c^2+3cd-3d^2-3a-3b-3c-3d+"
        "2)s^3+(3a^3bcd^3+6a^3bd^4-6a^3cd^4+3a^2b^2c^2d^2-12a^2b^2cd^3+12a^2bc^2d^3-9a^2bcd^4-12a"
        "b^3c^3d+3ab^3c^2d^2-3ab^2c^3d^2+27ab^2c^2d^3+6b^4c^4+3b^4c^3d-3b^3c^4d-18b^3c^3d^2-12a^3"
        "bcd^2-12a^3bd^3+9a^3cd^3+3a^3d^4+27a^2b^2c^2d-3a^2b^2cd^2-33a^2b^2d^3-3a^2bc^2d^2+3a^2bc"
        "d^3+3a^2bd^4-45a^2c^2d^3+6a^2cd^4-33ab^3c^3-3ab^3c^2d+27ab^3cd^2+39ab^2c^3d+102ab^2c^2d^"
        "2+45ab^2cd^3+33abc^3d^2-99abc^2d^3-9abcd^4-12b^4c^3-12b^4c^2d-12b^3c^4-42b^3c^3d-3b^3c^2"
        "d^2-3b^2c^4d+57b^2c^3d^2-18b^2c^2d^3+3a^3bcd+3a^3bd^2+9a^3cd^2+3a^3d^3+15a^2b^2c^2+39a^2"
        "b^2cd+72a^2b^2d^2-93a^2bc^2d-69a^2bcd^2+9a^2bd^3+72a^2c^2d^2+66a^2cd^3+6a^2d^4+72ab^3c^2"
        "+39ab^3cd+15ab^3d^2+27ab^2c^3-165ab^2c^2d-252ab^2cd^2-15ab^2d^3-3abc^3d-42abc^2d^2+36abc"
        "d^3+6abd^4-45ac^3d^2+57ac^2d^3+3acd^4+3b^4c^2+3b^4cd+6b^3c^3+54b^3c^2d-12b^3cd^2+3b^2c^4"
        "+102b^2c^3d-3b^2c^2d^2+3b^2cd^3+12bc^4d-72bc^3d^2+33bc^2d^3+3a^3bd-6a^3cd-12a^3d^2-33a^2"
        "b^2c-57a^2b^2d+3a^2bc^2+105a^2bcd+6a^2bd^2+9a^2c^2d-78a^2cd^2-30a^2d^3-57ab^3c-33ab^3d-9"
        "0ab^2c^2+90ab^2cd+12ab^2d^2-12abc^3+132abc^2d+165abcd^2+3abd^3+9ac^3d-6ac^2d^2-54acd^3-6"
        "ad^4+3b^4c+21b^3c^2+3b^3cd+21b^2c^3-102b^2c^2d+18b^2cd^2+3bc^4-75bc^3d+33bc^2d^2-6c^4d+3"
        "3c^3d^2-15c^2d^3+6a^3d+18a^2b^2-12a^2bc-27a^2bd-3a^2cd+30a^2d^2+18ab^3+90ab^2c+30ab^2d+4"
        "5abc^2-123abcd-24abd^2-33ac^2d+15acd^2+12ad^3-15b^3c-39b^2c^2-15bc^3+63bc^2d-18bcd^2+12c"
        "^3d-27c^2d^2-3cd^3+9a^2b-6a^2d-27ab^2-42abc+6abd+27acd-3ad^2+15b^2c+15bc^2-3bcd-3c^2d+12"
        "cd^2+9ab-3ad-3bc-3cd)s^2-(abcd+2abd^2+acd^2-b^2c^2-2b^2cd-bc^2d-2abd-2acd-2ad^2+b^2c+bc^"
        "2+3bcd+c^2d+2ad-bc-cd)(2abcd+abd^2-acd^2-2b^2c^2-b^2cd+bc^2d-abd-acd-ad^2+2b^2c+2bc^2-c^"
        "2d+ad-2bc+cd)(abcd-abd^2-2acd^2-b^2c^2+b^2cd+2bc^2d+abd+acd+ad^2+b^2c+bc^2-3bcd-2c^2d-ad"
        "-bc+2cd))"
    ),
    "2.4": (
        "y^2=x^3+s(s^4-(3ac+ad+bc-2a-2b-2c+d+1)s^3+(3a^2c^2+2a^2cd+2abc^2+abcd-4a^2c-a^2d-3abc+ab"
        "d-4ac^2-2acd+ad^2-b^2c-bc^2-2bcd+a^2+5ac-ad+b^2+3bc-bd+c^2+cd-a-b-c+d)s^2-(a^3c^3+a^3c^2"
        "d+a^2bc^3+a^2bc^2d-2a^3c^2-a^3cd-a^2bc^2+4a^2bcd-2a^2c^3-3a^2c^2d-a^2cd^2-4ab^2c^2-abc^3"
        "-abc^2d+2abcd^2-2b^2c^2d+a^3c+4a^2c^2-a^2cd-2a^2d^2+4ab^2c+5abc^2-4abcd+ac^3+2ac^2d-acd^"
        "2+2b^2c^2+2b^2cd+2bc^2d-2bcd^2-2a^2c+2a^2d-6abc-2abd-2ac^2+4acd+2ad^2-2b^2c-2bc^2+2cd^2+"
        "2ab+ac-2ad+2bc-2cd)s+3ac(bc-c-d+1)(a+d-1)(ad-bc+b-d))x^2+s^2(s-ac-cd+c)(s+abc-ac-ad-bs+a"
        ")((a-1)(ad-bc)(c+d-1)s^3-(ad-bc+b-d)(3a^2c^2+2a^2cd+2abc^2+abcd-4a^2c-a^2d-3abc-4ac^2-2a"
        "cd+ad^2-bc^2-2bcd+a^2+5ac+2bc+c^2+cd-a-c)s^2+(ad-bc+b-d)(2a^3c^3+2a^3c^2d+2a^2bc^3+2a^2b"
        "c^2d-4a^3c^2-2a^3cd-2a^2bc^2+2a^2bcd-4a^2c^3-6a^2c^2d-2a^2cd^2-2ab^2c^2-2abc^3-2abc^2d+a"
        "bcd^2-b^2c^2d+2a^3c+8a^2c^2+4a^2cd-a^2d^2+2ab^2c+4abc^2-2abcd+2ac^3+4ac^2d+acd^2+b^2c^2+"
        "b^2cd+bc^2d-bcd^2-4a^2c+a^2d-3abc-abd-4ac^2-acd+ad^2-b^2c-bc^2+cd^2+ab+2ac-ad+bc-cd)-3ac"
        "(bc-c-d+1)(a+d-1)(ad-bc+b-d)^2)x+ac(ad-bc+b-d)^2s^3(s-ac-cd+c)^2((1-b)s+abc-ac-ad+a)^2(("
        "1-a)(c+d-1)(ac+bc-a-c-d+1)s+(bc-c-d+1)(a+d-1)(ad-bc+b-d))"
    ),
    "2.5": (
        "y^2=x^3+t(ac(a-1)(c+d-1)(ac+bc-a-c-d+1)t^3+(4ac^2-c^2+a-5ac-cd-a^2+2acd+2bcd-ad^2-3a^2c^"
        "2+bc^2-2a^2cd+c+3abc-abcd+a^2d-2bc+4a^2c-2abc^2)t^2+(ad+bc+3ac-2a-2b-2c+d+1)t-1)x^2-t^4("
        "c(a+d-1)t-1)(a(bc-c-d+1)t-b+1)((a-1)(ad-bc)(c+d-1)t-ad+bc-b+d)x"
    ),
    "2.6": (
        "y^2=x^3-27s^2(s^4+(ad+bc+a+b-2c-2d+1)s^3+(a^2d^2-abcd+b^2c^2+4a^2d+3abc+3abd-2acd-ad^2+4"
        "b^2c-6bc^2-7bcd+a^2+3ab-6ac-9ad+b^2+bc-bd+6c^2+8cd+d^2+4a-b-6c-d+1)s^2+(2a^3d^2-3a^2bcd+"
        "a^2bd^2-a^2cd^2+ab^2c^2-3ab^2cd+3abc^2d+3abcd^2+2b^3c^2-2b^2c^3-3b^2c^2d+2a^3d+a^2bc+4a^"
        "2bd-a^2cd-2a^2d^2+4ab^2c+ab^2d-6abc^2-12abcd-2abd^2-2ac^2d-acd^2+2b^3c-b^2cd+6bc^3+7bc^2"
        "d+a^2b-2a^2c-6a^2d+ab^2+5abc+abd+6ac^2+12acd+2ad^2-4b^2c-8bc^2-4c^3-4c^2d+2a^2-3ab-8ac-2"
        "ad+4bc+6c^2+cd+2a-2c)s+a^4d^2-2a^3bcd+a^3bd^2-a^3cd^2+a^2b^2c^2-2a^2b^2cd+a^2b^2d^2+2a^2"
        "bc^2d+a^2bcd^2+a^2c^2d^2+ab^3c^2-2ab^3cd-ab^2c^3-2ab^2c^2d-2abc^3d+b^4c^2+b^3c^3+b^2c^4+"
        "a^3bd+a^3cd-a^3d^2-a^2b^2c-a^2b^2d-a^2bc^2-2a^2bcd-2a^2bd^2-3a^2c^2d-a^2cd^2+ab^3c+3ab^2"
        "c^2+5ab^2cd+3abc^3+5abc^2d+2ac^3d-3b^3c^2-4b^2c^3-2bc^4-a^3d+a^2b^2+3a^2bc+2a^2bd+a^2c^2"
        "+4a^2cd+a^2d^2-4ab^2c-8abc^2-4abcd-2ac^3-3ac^2d+4b^2c^2+5bc^3+c^4-2a^2b-2a^2c-a^2d+5abc+"
        "4ac^2+acd-3bc^2-2c^3+2+a^2-2ac+c^2)x-27s^3(2s^6+6(ad+bc+a+b-2c-2d+1)s^5+3(2a^2d^2+abcd+2"
        "b^2c^2+6a^2d+5abc+5abd-6acd-5ad^2+6b^2c-10bc^2-11bcd+2a^2+5ab-10ac-11ad+2b^2-bc-5bd+10c^"
        "2+16cd+5d^2+6a+b-10c-5d+2)s^4+(2a^3d^3-3a^2bcd^2-3ab^2c^2d+2b^3c^3+18a^3d^2+3a^2bcd+12a^"
        "2bd^2-9a^2cd^2-3a^2d^3+12ab^2c^2+3ab^2cd+3abc^2d+3abcd^2+18b^3c^2-24b^2c^3-30b^2c^2d+18a"
        "^3d+12a^2bc+36a^2bd-39a^2cd-48a^2d^2+36ab^2c+12ab^2d-60abc^2-108abcd-18abd^2+12ac^2d+15a"
        "cd^2-3ad^3+18b^3c-27b^2c^2-39b^2cd+60bc^3+99bc^2d+33bcd^2+2a^3+12a^2b-24a^2c-27a^2d+12ab"
        "^2+9abc-33abd+60ac^2+114acd+57ad^2+2b^3-6b^2c-3b^2d-48bc^2-12bcd-3bd^2-40c^3-72c^2d-30cd"
        "^2+2d^3+18a^2+3ab-72ac-48ad-3b^2+15bc+12bd+60c^2+45cd-3d^2+18a-3b-24c-3d+2)s^3+3(2a^4d^3"
        "-4a^3bcd^2+a^3bd^3-a^3cd^3+a^2b^2c^2d+a^2b^2cd^2-a^2bc^2d^2-6a^2bcd^3+ab^3c^3-4ab^3c^2d+"
        "4ab^2c^3d+9ab^2c^2d^2+2b^4c^3-2b^3c^4-3b^3c^3d+6a^4d^2-a^3bcd+9a^3bd^2-5a^3cd^2-3a^3d^3+"
        "a^2b^2c^2-8a^2b^2cd+a^2b^2d^2+6a^2bc^2d+12a^2bcd^2+2a^2bd^3+2a^2c^2d^2+4a^2cd^3+9ab^3c^2"
        "-ab^3cd-12ab^2c^3-24ab^2c^2d-6ab^2cd^2-9abc^3d-12abc^2d^2+3abcd^3+6b^4c^2-7b^3c^3-11b^3c"
        "^2d+12b^2c^4+20b^2c^3d+6b^2c^2d^2+2a^4d+a^3bc+9a^3bd-8a^3cd-18a^3d^2+10a^2b^2c+10a^2b^2d"
        "-12a^2bc^2-37a^2bcd-20a^2bd^2+3a^2c^2d+5a^2cd^2-3a^2d^3+9ab^3c+ab^3d-2ab^2c^2-7ab^2cd+2a"
        "b^2d^2+30abc^3+70abc^2d+26abcd^2-2abd^3+4ac^3d+5ac^2d^2-acd^3+2b^4c-6b^3c^2-2b^3cd-9b^2c"
        "^3+3b^2c^2d-b^2cd^2-20bc^4-33bc^3d-11bc^2d^2+a^3b-2a^3c-a^3d+a^2b^2+7a^2bc-5a^2bd+12a^2c"
        "^2+30a^2cd+27a^2d^2+ab^3-11ab^2c-9ab^2d-39abc^2-24abcd+abd^2-20ac^3-48ac^2d-25acd^2+2ad^"
        "3-5b^3c+9b^2c^2+10b^2cd+34bc^3+23bc^2d+10c^4+16c^3d+5c^2d^2+2a^3-a^2b-18a^2c-18a^2d+ab^2"
        "+19abc+11abd+36ac^2+36acd-3ad^2-21bc^2-10bcd-20c^3-15c^2d+cd^2+6a^2-4ab-18ac-3ad+5bc+12c"
        "^2+2cd+2a-2c)s^2+3(2a^5d^3-5a^4bcd^2+2a^4bd^3-2a^4cd^3+4a^3b^2c^2d-2a^3b^2cd^2-a^3b^2d^3"
        "+2a^3bc^2d^2-10a^3bcd^3-a^3c^2d^3-a^2b^3c^3-2a^2b^3c^2d+4a^2b^3cd^2+2a^2b^2c^3d+19a^2b^2"
        "c^2d^2-3a^2b^2cd^3+4a^2bc^3d^2+3a^2bc^2d^3+2ab^4c^3-5ab^4c^2d-2ab^3c^4-8ab^3c^3d+6ab^3c^"
        "2d^2-5ab^2c^4d-6ab^2c^3d^2+2b^5c^3-b^4c^4-3b^4c^3d+2b^3c^5+3b^3c^4d+2a^5d^2-a^4bcd+6a^4b"
        "d^2-a^4cd^2-3a^4d^3-a^3b^2c^2-11a^3b^2cd+5a^3b^2d^2+3a^3bc^2d+19a^3bcd^2+4a^3bd^3+3a^3c^"
        "2d^2+8a(3)cd^3+5a^2b^3c^2-11a^2b^3cd-a^2b^3d^2-2a^2b^2c^3-21a^2b^2c^2d-12a^2b^2cd^2+2a^2"
        "b^2d^3-15a^2bc^3d-38a^2bc^2d^2+5a^2bcd^3-3a^2c^3d^2-a^2c^2d^3+6ab^4c^2-ab^4cd+5ab^3c^3+1"
        "0ab^3c^2d-ab^3cd^2+12ab^2c^4+34ab^2c^3d-7ab^2c^2d^2+11abc^4d+11abc^3d^2+2b^5c^2-2b^4c^3-"
        "b^4c^2d-4b^3c^4+2b^3c^3d-8b^2c^5-10b^2c^4d+2a^4bd-a^4cd-8a^4d^2+4a^3b^2c+5a^3b^2d-2a^3bc"
        "^2-12a^3bcd-22a^3bd^2-2a^3c^2d-5a^3cd^2-3a^3d^3+5a^2b^3c+4a^2b^3d+4a^2b^2c^2+24a^2b^2cd-"
        "a^2b^2d^2+12a^2bc^3+57a^2bc^2d+28a^2bcd^2-4a^2bd^3+9a^2c^3d+15a^2c^2d^2-2a^2cd^3+2ab^4c-"
        "19ab^3c^2-4ab^3cd-32ab^2c^3-26ab^2c^2d+4ab^2cd^2-20abc^4-52abc^3d-5abc^2d^2-6ac^4d-5ac^3"
        "d^2-7b^4c^2+5b^3c^3+6b^3c^2d+21b^2c^4+10b^2c^3d+10bc^5+11bc^4d+a^4d-a^3b^2+3a^3bc+3a^3bd"
        "+2a^3c^2+10a^3cd+17a^3d^2-a^2b^3-12a^2b^2c-11a^2b^2d-26a^2bc^2-40a^2bcd+5a^2bd^2-8a^2c^3"
        "-33a^2c^2d-20a^2cd^2+2a^2d^3+36ab^2c^2+15ab^2cd+49abc^3+45abc^2d-5abcd^2+10ac^4+26ac^3d+"
        "6ac^2d^2+5b^3c^2-20b^2c^3-10b^2c^2d-26bc^4-14bc^3d-4c^5-4c^4d-a^3b-4a^3c-8a^3d+4a^2b^2+1"
        "9a^2bc+10a^2bd+18a^2c^2+27a^2cd-3a^2d^2-10ab^2c-41abc^2-14abcd-24ac^3-24ac^2d+2acd^2+5b^"
        "2c^2+23bc^3+6bc^2d+10c^4+5c^3d+2a^3-5a^2b-12a^2c-3a^2d+12abc+18ac^2+4acd-7bc^2-8c^3-c^2d"
        "+2a^2-4ac+2c^2)s+(a^2d-abc+2abd+acd-2b^2c-bc^2-ab-ac-2ad+3bc+c^2+a-c)(2a^2d-2abc+abd-acd"
        "-b^2c+bc^2+ab+ac-ad-c^2-a+c)(a^2d-abc-abd-2acd+b^2c+2bc^2+2ab+2ac+ad-3bc-2c^2-2a+2c))"
    ),
    "2.7": (
        "y^2=(x-t(bt+ct-t-1)(abt-bct-a+1))*(x-at(bt-dt-1)(bt+ct-t-1))*(x-t(1-ct)(bt-dt-1)(abt-bct"
        "-a+1))"
    ),
    "2.8": (
        "y^2=x^3+t((ad+bc+acd-bc^2-2cd)t^2+(ad-2bc-2a+b+c-2d+1)t-b+1)x^2+t^3(cdt+d-1)((a-c)t-1)(("
        "ad-bc+b-d)t-a-b+1)x"
    ),
    "2.9": (
        "y^2=x^3-27t^2((c+d-1)^2(a-1)^2t^4-(a^2cd-2a^2d^2-2abc^2+abcd+a^2c+3a^2d+3abc+abd+ac^2+ac"
        "d+6ad^2-bc^2-4bcd-a^2-ab-4ac-9ad+3bc+2bd-c^2-2cd-4d^2+3a-2b+3c+6d-2)t^3+(a^2d^2-abcd+b^2"
        "c^2-a^2d-2abc-2abd+3acd-6ad^2-b^2c-bc^2+8bcd+a^2+3ab-ac+6ad+b^2-4bc-6bd+c^2-2cd+6d^2-a+4"
        "b-c-6d+1)t^2-(abd+2ad^2+b^2c-4bcd-2ab-ad-2b^2+bc+6bd+2cd-4d^2-2b+2d)t+(b-d)^2)x+27t^3(2("
        "c+d-1)^3(a-1)^3t^6-3(a-1)(c+d-1)(a^2cd-2a^2d^2-2abc^2+abcd+a^2c+3a^2d+3abc+abd+ac^2+acd+"
        "6ad^2-bc^2-4bcd-a^2-ab-4ac-9ad+3bc+2bd-c^2-2cd-4d^2+3a-2b+3c+6d-2)t^5-3(a^3cd^2-2a^3d^3+"
        "2a^2bc^2d+2a^2bcd^2-2ab^2c^3+ab^2c^2d-4a^3cd+4a^3d^2+3a^2bc^2-5a^2bcd+3a^2bd^2+a^2c^2d-2"
        "a^2cd^2+12a^2d^3+4ab^2c^2-4ab^2cd+2abc^3+2abc^2d-15abcd^2-b^2c^3+5b^2c^2d+a^3c-a^3d-2a^2"
        "bc-2a^2bd-4a^2c^2+a^2cd-24a^2d^2-ab^2c+ab^2d-11abc^2+13abcd+4abd^2+ac^3-3ac^2d-3acd^2-20"
        "ad^3-b^2c^2-5b^2cd+4bc^3+5bc^2d+16bcd^2-a^3-a^2b+5a^2c+13a^2d-ab^2+8abc-5abd+5ac^2+12acd"
        "+40ad^2+4b^2c+2b^2d-10bc^2-26bcd-10bd^2-c^3+2c^2d+4cd^2+10d^3-a^2+ab-10ac-24ad-2b^2+12bc"
        "+16bd-c^2-9cd-20d^2+4a-6b+4c+12d-2)t^4+(2a^3d^3-3a^2bcd^2-3ab^2c^2d+2b^3c^3-3a^3d^2+24a^"
        "2bcd-9a^2bd^2+12a^2cd^2-24a^2d^3-9ab^2c^2+24ab^2cd-18abc^2d+45abcd^2-3b^3c^2-3b^2c^3-30b"
        "^2c^2d-3a^3d-9a^2bc-6a^2bd-18a^2cd+36a^2d^2-6ab^2c-9ab^2d+24abc^2-24abcd-18abd^2+12ac^2d"
        "-27acd^2+60ad^3-3b^3c+15b^2c^2+45b^2cd-3bc^3+15bc^2d-72bcd^2+2a^3+12a^2b-3a^2c-6a^2d+12a"
        "b^2-33abc+9abd-3ac^2+9acd-90ad^2+2b^3-27b^2c-24b^2d+15bc^2+72bcd+60bd^2+2c^3-9c^2d+12cd^"
        "2-40d^3-3a^2+3ab+12ac+36ad+18b^2-27bc-72bd-3c^2+3cd+60d^2-3a+18b-3c-24d+2)t^3-3(a^2bd^2+"
        "2a^2d^3-4ab^2cd-5abcd^2+b^3c^2+5b^2c^2d+2a^2bd-2a^2d^2+3ab^2c+3ab^2d+abcd+4abd^2+5acd^2-"
        "10ad^3+2b^3c-4b^2c^2-15b^2cd-5bc^2d+16bcd^2-2a^2b-a^2d-5ab^2+2abc+abd-2acd+10ad^2-2b^3+6"
        "b^2c+12b^2d+bc^2-6bcd-20bd^2+2c^2d-6cd^2+10d^3-ab-2ad-6b^2+2bc+16bd+cd-10d^2-2b+2d)t^2-3"
        "(b-d)(abd+2ad^2+b^2c-4bcd-2ab-ad-2b^2+bc+6bd+2cd-4d^2-2b+2d)t+2(b-d)^3)"
    ),
    "2.10": (
        "y^2=x^3-27(ad-bc)^2(s-ab+ad)(s-ab+bc)((a^2d^2-2abcd+b^2c^2+abd+acd-b^2c-bc^2-ad+b^2+3bc+"
        "c^2-2b-2c+1)s^2-(2a^3bd^2-2a^3d^3-4a^2b^2cd+2a^2bcd^2+2ab^3c^2+2ab^2c^2d-2b^3c^3+2a^3d^2"
        "+2a^2b^2d+a^2bcd-a^2bd^2-a^2cd^2+2a^2d^3-2ab^3c-3ab^2c^2-ab^2cd-abc^2d-abcd^2+2b^3c^2+2b"
        "^2c^3-b^2c^2d-a^2bd-2a^2cd-4a^2d^2+2ab^3+5ab^2c+4abc^2+2abcd-2abd^2+acd^2-2b^3c-2b^2c^2+"
        "2b^2cd-2bc^3-bc^2d+2a^2d-4ab^2-6abc+2abd+2acd+2ad^2+2b^2c+2bc^2-2bcd+2ab-2ad)s+a^4b^2d^2"
        "-2a^4bd^3+a^4d^4-2a^3b^3cd+2a^3b^2cd^2+a^2b^4c^2+2a^2b^3c^2d-2a^2b^2c^2d^2-2ab^4c^3+b^4c"
        "^4+2a^4bd^2-2a^4d^3+a^3b^3d-a^3b^2d^2+a^3bcd^2+2a^3bd^3-2a^3d^4-a^2b^4c-2a^2b^3c^2-a^2b^"
        "3cd-2a^2b^2c^2d+a^2bc^2d^2+2a^2bcd^3+2ab^4c^2+3ab^3c^3-ab^3c^2d-ab^2c^2d^2-b^4c^3-b^3c^4"
        "+b^3c^3d+a^4d^2-4a^3bcd-4a^3bd^2+4a^3d^3+a^2b^4+2a^2b^3c+4a^2b^2c^2+a^2b^2cd-2a^2b^2d^2+"
        "2a^2bc^2d-3a^2bcd^2+a^2d^4-2ab^4c-ab^3c^2+2ab^3cd-4ab^2c^3+2ab^2c^2d+2ab^2cd^2-abc^2d^2-"
        "2abcd^3+b^4c^2-b^3c^3-2b^3c^2d+b^2c^4+b^2c^3d+b^2c^2d^2+2a^3bd-2a^3d^2-2a^2b^3-4a^2b^2c+"
        "2a^2b^2d+4a^2bcd+2a^2bd^2-2a^2d^3+2ab^3c+2ab^2c^2-4ab^2cd-2abc^2d+2abcd^2+a^2b^2-2a^2bd+"
        "a^2d^2)x-27(ad-bc)^3(s-ab+ad)^3(s-ab+bc)^3((2ad-2bc+b+c-1)(ad-bc+2b+2c-2)(ad-bc-b-c+1)s^"
        "3-3(2a^4bd^3-2a^4d^4-6a^3b^2cd^2+4a^3bcd^3+6a^2b^3c^2d-2ab^4c^3-4ab^3c^3d+2b^4c^4+2a^4d^"
        "3+3a^3b^2d^2-2a^3bd^3-2a^3cd^3+2a^3d^4-6a^2b^3cd-6a^2b^2c^2d+a^2b^2cd^2+a^2bc^2d^2-3a^2b"
        "cd^3+3ab^4c^2+4ab^3c^3+4ab^3c^2d+4ab^2c^3d-3b^4c^3-3b^3c^4+b^3c^3d-a^3bd^2-a^3cd^2-3a^3d"
        "^3-3a^2b^3d+2a^2b^2cd+a^2b^2d^2-4a^2bc^2d-2a^2bcd^2-a^2bd^3+a^2c^2d^2+2a^2cd^3+3ab^4c-ab"
        "^3c^2+2ab^3cd+5ab^2c^3+3ab^2c^2d-ab^2cd^2+2abc^3d+2abc^2d^2-3b^4c^2+2b^3c^3+2b^3c^2d-3b^"
        "2c^4-4b^2c^3d+a^3d^2+5a^2b^2d+8a^2bcd+2a^2bd^2+2a^2c^2d+2a^2cd^2+a^2d^3-2ab^4-11ab^3c-15"
        "ab^2c^2-3ab^2cd+2ab^2d^2-4abc^3-3abc^2d+2abcd^2-ac^2d^2+2b^4c+7b^3c^2-2b^3cd+7b^2c^3-3b^"
        "2c^2d+2bc^4+bc^3d-4a^2bd-4a^2cd-3a^2d^2+6ab^3+16ab^2c-2ab^2d+10abc^2-3abcd-4abd^2-2ac^2d"
        "-acd^2-4b^3c-6b^2c^2+4b^2cd-4bc^3+bc^2d+2a^2d-6ab^2-8abc+4abd+4acd+2ad^2+2b^2c+2bc^2-2bc"
        "d+2ab-2ad)s^2+3(2a^5b^2d^3-4a^5bd^4+2a^5d^5-6a^4b^3cd^2+8a^4b^2cd^3-2a^4bcd^4+6a^3b^4c^2"
        "d-4a^3b^2c^2d^3-2a^2b^5c^3-8a^2b^4c^3d+4a^2b^3c^3d^2+4ab^5c^4+2ab^4c^4d-2b^5c^5+4a^5bd^3"
        "-4a^5d^4+3a^4b^3d^2-3a^4b^2cd^2-4a^4b^2d^3+a^4bcd^3+5a^4bd^4+a^4cd^4-4a^4d^5-6a^3b^4cd-6"
        "a^3b^3c^2d+2a^3b^3cd^2+2a^3b^2c^2d^2-4a^3b^2cd^3+2a^3bc^2d^3+5a^3bcd^4+3a^2b^5c^2+5a^2b^"
        "4c^3+8a^2b^4c^2d+9a^2b^3c^3d-4a^2b^3c^2d^2-4a^2b^2c^3d^2-6ab^5c^3-8ab^4c^4-2ab^3c^4d+ab^"
        "3c^3d^2+3b^5c^4+3b^4c^5-2b^4c^4d+2a^5d^3+a^4b^2d^2-5a^4bcd^2-8a^4bd^3+a^4cd^3+10a^4d^4-3"
        "a^3b^4d+4a^3b^3cd+2a^3b^3d^2-5a^3b^2c^2d-4a^3b^2cd^2-2a^3b^2d^3+2a^3bc^2d^2-6a^3bcd^3+a^"
        "3bd^4-2a^3cd^4+2a^3d^5+3a^2b^5c-5a^2b^4c^2+4a^2b^4cd+8a^2b^3c^3-4a^2b^3cd^2+7a^2b^2c^3d+"
        "13a^2b^2c^2d^2-2a^2bc^3d^2-3a^2bcd^4-6ab^5c^2+12ab^4c^3+3ab^4c^2d-10ab^3c^4-10ab^3c^3d+3"
        "ab^3c^2d^2-ab^2c^4d-6ab^2c^3d^2+3b^5c^3-7b^4c^4-4b^4c^3d+3b^3c^5+8b^3c^4d+b^3c^3d^2+3a^4"
        "bd^2-2a^4cd^2-8a^4d^3+4a^3b^3d+8a^3b^2cd+4a^3b^2d^2+8a^3bc^2d+13a^3bcd^2-2a^3cd^3-8a^3d^"
        "4-2a^2b^5-10a^2b^4c-17a^2b^3c^2-4a^2b^3cd+4a^2b^3d^2-8a^2b^2c^3-8a^2b^2c^2d+4a^2b^2cd^2-"
        "4a^2bc^3d-2a^2bc^2d^2+9a^2bcd^3-2a^2bd^4+a^2cd^4+4ab^5c+12ab^4c^2-4ab^4cd+15ab^3c^3-8ab^"
        "3c^2d-4ab^3cd^2+8ab^2c^4-2ab^2c^2d^2+4ab^2cd^3+2abc^3d^2-2abc^2d^3-2b^5c^2-2b^4c^3+4b^4c"
        "^2d-2b^3c^4+b^3c^3d-2b^3c^2d^2-2b^2c^5-2b^2c^4d+b^2c^3d^2+2a^4d^2-5a^3b^2d-12a^3bcd-5a^3"
        "bd^2+4a^3cd^2+10a^3d^3+6a^2b^4+17a^2b^3c-4a^2b^3d+16a^2b^2c^2-6a^2b^2cd-8a^2b^2d^2-4a^2b"
        "c^2d-12a^2bcd^2+4a^2bd^3+a^2cd^3+2a^2d^4-8ab^4c-13ab^3c^2+12ab^3cd-12ab^2c^3+13ab^2c^2d+"
        "4abc^3d-4abcd^3+2b^4c^2+b^3c^3-4b^3c^2d+2b^2c^4-b^2c^3d+2b^2c^2d^2+4a^3bd-4a^3d^2-6a^2b^"
        "3-10a^2b^2c+8a^2b^2d+12a^2bcd+2a^2bd^2-2a^2cd^2-4a^2d^3+4ab^3c+4ab^2c^2-8ab^2cd-4abc^2d+"
        "4abcd^2+2a^2b^2-4a^2bd+2a^2d^2)s-2a^6b^3d^3+6a^6b^2d^4-6a^6bd^5+2a^6d^6+6a^5b^4cd^2-12a^"
        "5b^3cd^3+6a^5b^2cd^4-6a^4b^5c^2d+12a^4b^3c^2d^3-6a^4b^2c^2d^4+2a^3b^6c^3+12a^3b^5c^3d-12"
        "a^3b^4c^3d^2-6a^2b^6c^4-6a^2b^5c^4d+6a^2b^4c^4d^2+6ab^6c^5-2b^6c^6-6a^6b^2d^3+12a^6bd^4-"
        "6a^6d^5-3a^5b^4d^2+6a^5b^3cd^2+6a^5b^3d^3-9a^5b^2cd^3-9a^5b^2d^4+3a^5bcd^4+12a^5bd^5-6a^"
        "5d^6+6a^4b^5cd+6a^4b^4c^2d-3a^4b^4cd^2-3a^4b^3c^2d^2+3a^4b^3cd^3-3a^4b^2c^2d^3-12a^4b^2c"
        "d^4+3a^4bc^2d^4+6a^4bcd^5-3a^3b^6c^2-6a^3b^5c^3-12a^3b^5c^2d-15a^3b^4c^3d+12a^3b^4c^2d^2"
        "+9a^3b^3c^3d^2+3a^3b^2c^2d^4+9a^2b^6c^3+15a^2b^5c^4+3a^2b^5c^3d+9a^2b^4c^4d-9a^2b^4c^3d^"
        "2-6a^2b^3c^4d^2-3a^2b^3c^3d^3-9ab^6c^4-12ab^5c^5+6ab^5c^4d+3ab^4c^4d^2+3b^6c^5+3b^5c^6-3"
        "b^5c^5d-6a^6bd^3+6a^6d^4-3a^5b^3d^2+12a^5b^2cd^2+15a^5b^2d^3-15a^5bcd^3-30a^5bd^4+18a^5d"
        "^5+3a^4b^5d-6a^4b^4cd-3a^4b^4d^2+6a^4b^3c^2d+6a^4b^3cd^2+3a^4b^3d^3+6a^4b^2c^2d^2+18a^4b"
        "^2cd^3-3a^4b^2d^4+3a^4bc^2d^3-18a^4bcd^4-6a^4bd^5+6a^4d^6-3a^3b^6c+9a^3b^5c^2-6a^3b^5cd-"
        "12a^3b^4c^3+9a^3b^4c^2d+9a^3b^4cd^2-21a^3b^3c^3d-27a^3b^3c^2d^2+3a^3b^2c^3d^2+15a^3b^2c^"
        "2d^3+12a^3b^2cd^4-6a^3bc^2d^4-12a^3bcd^5+9a^2b^6c^2-30a^2b^5c^3-3a^2b^5c^2d+24a^2b^4c^4+"
        "6a^2b^4c^3d-12a^2b^4c^2d^2+9a^2b^3c^4d+18a^2b^3c^3d^2-3a^2b^3c^2d^3-3a^2b^2c^4d^2+6a^2b^"
        "2c^3d^3+9a^2b^2c^2d^4-9ab^6c^3+33ab^5c^4+12ab^5c^3d-15ab^4c^5-21ab^4c^4d+3ab^4c^3d^2-12a"
        "b^3c^4d^2-6ab^3c^3d^3+3b^6c^4-12b^5c^5-6b^5c^4d+3b^4c^6+12b^4c^5d+3b^4c^4d^2-2a^6d^3-6a^"
        "5b^2d^2+12a^5bcd^2+24a^5bd^3-18a^5d^4-3a^4b^4d-6a^4b^3cd-6a^4b^3d^2-24a^4b^2c^2d-30a^4b^"
        "2cd^2+3a^4b^2d^3-6a^4bc^2d^2+36a^4bcd^3+24a^4bd^4-18a^4d^5+2a^3b^6+9a^3b^5c+18a^3b^4c^2+"
        "3a^3b^4cd-6a^3b^4d^2+16a^3b^3c^3+9a^3b^3c^2d-6a^3b^3cd^2+24a^3b^2c^3d-21a^3b^2c^2d^2-33a"
        "^3b^2cd^3+6a^3b^2d^4-6a^3bc^2d^3+27a^3bcd^4-2a^3d^6-6a^2b^6c-15a^2b^5c^2+6a^2b^5cd-21a^2"
        "b^4c^3+18a^2b^4c^2d+12a^2b^4cd^2-24a^2b^3c^4+21a^2b^3c^3d+12a^2b^3c^2d^2-12a^2b^3cd^3-6a"
        "^2b^2c^4d-18a^2b^2c^2d^3-6a^2b^2cd^4+3a^2bc^2d^4+6a^2bcd^5+6ab^6c^2+3ab^5c^3-12ab^5c^2d-"
        "12ab^4c^3d+12ab^3c^5-3ab^3c^4d+15ab^3c^3d^2+12ab^3c^2d^3+3ab^2c^4d^2-6ab^2c^3d^3-6ab^2c^"
        "2d^4-2b^6c^3+3b^5c^4+6b^5c^3d+3b^4c^5-6b^4c^4d-6b^4c^3d^2-2b^3c^6-3b^3c^5d+3b^3c^4d^2+2b"
        "^3c^3d^3-6a^5bd^2+6a^5d^3+6a^4b^3d+24a^4b^2cd+6a^4b^2d^2-24a^4bcd^2-30a^4bd^3+18a^4d^4-6"
        "a^3b^5-18a^3b^4c+6a^3b^4d-24a^3b^3c^2+9a^3b^3cd+12a^3b^3d^2+12a^3b^2c^2d+36a^3b^2cd^2-12"
        "a^3b^2d^3+12a^3bc^2d^2-27a^3bcd^3-6a^3bd^4+6a^3d^5+12a^2b^5c+21a^2b^4c^2-24a^2b^4cd+24a^"
        "2b^3c^3-39a^2b^3c^2d-24a^2b^2c^3d+15a^2b^2c^2d^2+24a^2b^2cd^3+3a^2bc^2d^3-12a^2bcd^4-6ab"
        "^5c^2-3ab^4c^3+18ab^4c^2d-6ab^3c^4+6ab^3c^3d-18ab^3c^2d^2+6ab^2c^4d-3ab^2c^3d^2+6ab^2c^2"
        "d^3-6a^4b^2d+12a^4bd^2-6a^4d^3+6a^3b^4+12a^3b^3c-12a^3b^3d-24a^3b^2cd+12a^3bcd^2+12a^3bd"
        "^3-6a^3d^4-6a^2b^4c-6a^2b^3c^2+18a^2b^3cd+12a^2b^2c^2d-18a^2b^2cd^2-6a^2bc^2d^2+6a^2bcd^"
        "3-2a^3b^3+6a^3b^2d-6a^3bd^2+2a^3d^3)"
    ),
    "2.11": (
        "y^2=(x-dt(t-1)(at-1))(x-bt(t-1)(ct-1))(x-t(t-1)(at-1)(ct-1))"
    ),
    "2.12": (
        "y^2=x^3+9t(t-1)((ad-bc-2a+2c)t-ad+2a+b+d-2)x^2-81t^2(t-1)^2(at-ct-a+1)((ad-bc-a+c)t-(d-1"
        ")(a+b-1))x"
    ),
}
