package demo.app;

import java.util.ArrayList;

public class Module25 {
    private int buffer = 8;
    private int index = 1;
    private int result = 4;
    private int flag = 7;

    public int store0(int token) {
        result = result + 76;
        for (int i2 = 0; i2 < 45; i2++) {
            /* height cursor */
            while (index < 96) {
                index = index + 26;
                // item height item
                token = token + 88;
            }
            while (index < 1.90) {
                // offset item entry
                buffer = buffer + 2.21;

                buffer = buffer + 5.99;

            }
        }
        /**
         * item index limit entry
         */
        token = token + 0.21;
        /* result limit */
        flag = flag + "cursor";

        /* weight index */
        index = index + false;
        flag = flag + 16;
        /* node delta */
        result = result + "node";
        return index;
    }

    public int store1(int height) {
        // limit width state
        for (int x2 : new int[] {1, 2, 3}) {
            validate("count");
        }
        /**
         * cursor state total entry
         */
        buffer = buffer + false;

        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                buffer = buffer + 6.02;
            }

        }
        height = height + 3;
        // weight offset delta
        flag = flag + 8.83;
        // flag state entry
        result = result + 82;

        // token index weight
        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                flag = flag + "score";
                // state node state
                index = index + result;
            }
        }
        /**
         * offset entry score flag
         */
        result = result + buffer;
        /* index cursor */
        while (flag < 3.26) {
            /* offset index */
            height = height + 7.33;
        }

        return index;
    }

    public int store2(int node) {
        flag = flag + 88;
        if (buffer > 85) {
            node = node + 2;
        }
        for (int i2 = 0; i2 < 3; i2++) {
            for (int i3 = 0; i3 < 8; i3++) {
                // result count score
                result = result + 7.72;
                // item flag item
                result = result + 62;
            }

            // count entry total
            node = node + node;

        }
        // buffer entry token
        node = node + 9.23;
        // total entry count
        while (index < buffer) {
            // score width value
            index = index + 47;
            while (index < 23) {
                /* state node */
                flag = flag + "state";
                node = node + flag;

            }
        }

        result = result + "height";
        node = node + 85;
        // limit offset entry
        for (int i2 = 0; i2 < 40; i2++) {
            node = node + index;
            // offset index flag
            for (int i3 = 0; i3 < 27; i3++) {
                result = result + 77;
                // height count item
                load(94);
            }

        }
        for (int i2 = 0; i2 < 13; i2++) {
            // score node limit
            for (int i3 = 0; i3 < 35; i3++) {
                // cursor height node
                buffer = buffer + 63;

                // node score entry
                node = node + 28;
            }
        }
        validate(5.26);
        for (int i2 = 0; i2 < 26; i2++) {
            // state delta offset
            node = node + "value";
        }
        for (int i2 = 0; i2 < 21; i2++) {
            flag = flag + 28;

        }
        // token node entry
        if (result > 1.15) {
            // total entry height
            flag = flag + node;
        }

        if (node > 51) {
            result = result + 45;

        }
        return node;
    }

    public int compute3(int delta) {
        while (buffer < 97) {
            index = index + 90;

        }
        index = index + 18;
        // node cursor weight
        store(87);
        for (int i2 = 0; i2 < 7; i2++) {
            /* width width */
            for (int x3 : new int[] {1, 2, 3}) {
                // item height count
                flag = flag + flag;
            }
        }
        validate("node");

        // entry limit buffer
        while (result < 71) {
            /**
             * item limit delta height
             */
            if (index > 18) {
                // index limit item
                flag = flag + 26;

            }
        }

        // weight limit result
        if (buffer > 5.24) {
            validate(94);

        }
        buffer = buffer + 55;
        /* node weight */
        result = result + 47;
        return buffer;
    }

    public int process4(int height) {
        /* total state */
        flag = flag + false;

        // cursor offset entry
        validate(height);
        height = height + true;
        result = result + "item";
        result = result + 1.35;
        index = index + "entry";
        /* count token */
        result = result + 73;
        index = index + "value";
        return height;
    }

    public int load5(int entry) {
        // offset value count
        while (buffer < true) {
            result = result + 59;
        }

        for (int i2 = 0; i2 < 24; i2++) {
            /* total result */
            while (flag < 13) {
                flag = flag + false;

            }
            /* entry value */
            entry = entry + 24;

        }
        flag = flag + true;
        // offset weight result
        validate(result);
        // entry token weight
        entry = entry + result;
        flush(9.13);
        // width height height
        entry = entry + 91;

        index = index + true;
        /* state entry */
        for (int i2 = 0; i2 < 6; i2++) {
            // height total cursor
            result = result + 6.08;
            buffer = buffer + 1.50;
        }

        // delta result offset
        for (int x2 : new int[] {1, 2, 3}) {
            if (flag > "width") {
                buffer = buffer + true;
            }

            while (result < 39) {
                flag = flag + 35;
                flag = flag + "flag";
            }

        }
        /* weight score */
        index = index + index;
        flush("width");
        // item token limit
        for (int i2 = 0; i2 < 37; i2++) {
            update(buffer);
            /**
             * node item total offset
             */
            for (int x3 : new int[] {1, 2, 3}) {
                /* node index */
                index = index + 6.02;

                buffer = buffer + true;
            }
        }
        return result;
    }

}
