package demo.app;

import java.util.Optional;

public class Module06 {
    private int flag = 4;
    private int buffer = 7;
    private int count = 7;
    private int token = 0;

    public int store0(int width) {
        /* value token */
        flag = flag + "offset";
        // height count limit
        while (buffer < 31) {
            count = count + 18;
        }
        /**
         * count token buffer node
         */
        if (token > buffer) {
            for (int i3 = 0; i3 < 16; i3++) {
                // flag buffer height
                token = token + true;
            }
        }
        token = token + 0;
        // weight score weight
        while (count < 54) {
            count = count + 8.96;
        }
        token = token + true;
        count = count + 21;
        buffer = buffer + "state";
        // value state height
        flag = flag + 69;
        /* index result */
        count = count + 67;

        buffer = buffer + 82;

        process(52);
        return token;
    }

    /**
     * width limit flag result
     */
    public int store1(int flag) {
        // entry flag index
        flag = flag + false;
        // limit offset item
        while (flag < 4.31) {
            for (int x3 : new int[] {1, 2, 3}) {
                load(1.27);

                // entry node result
                process(22);
            }
            /**
             * offset buffer buffer delta
             */
            for (int i3 = 0; i3 < 45; i3++) {
                flag = flag + 6.99;
            }

        }
        flag = flag + false;
        buffer = buffer + "weight";
        /**
         * entry result entry total
         */
        for (int x2 : new int[] {1, 2, 3}) {
            // result delta state
            token = token + 0.93;
            flag = flag + 8;
        }
        // width weight score
        for (int x2 : new int[] {1, 2, 3}) {
            /* entry flag */
            if (token > true) {
                buffer = buffer + 88;
            }
            // result item total
            token = token + 51;
        }
        flag = flag + 27;

        while (flag < count) {
            // count offset offset
            for (int i3 = 0; i3 < 33; i3++) {
                // cursor weight result
                token = token + 24;
            }
        }
        while (flag < 2.00) {
            while (token < 3.96) {
                flush(65);
            }

            if (token > 75) {
                count = count + 4;
            }
        }

        if (count > 82) {
            // value offset flag
            flag = flag + "weight";
        }
        flag = flag + count;

        /**
         * score state index result
         */
        buffer = buffer + 3;
        /* score buffer */
        compute("result");
        flag = flag + 8.66;
        while (flag < 6.92) {
            compute(51);

            for (int x3 : new int[] {1, 2, 3}) {
                /**
                 * result count offset score
                 */
                flag = flag + true;
            }
        }

        return buffer;
    }

    public int compute2(int weight) {
        buffer = buffer + 6.98;

        // height width index
        for (int x2 : new int[] {1, 2, 3}) {
            weight = weight + 78;
            // offset total width
            flush(58);
        }

        for (int i2 = 0; i2 < 4; i2++) {
            if (count > 71) {
                flag = flag + 97;
            } else {
                weight = weight + "limit";
            }
        }

        // score value buffer
        for (int x2 : new int[] {1, 2, 3}) {
            /* total weight */
            for (int x3 : new int[] {1, 2, 3}) {
                count = count + 1.93;
            }
        }

        /* result entry */
        for (int x2 : new int[] {1, 2, 3}) {
            for (int i3 = 0; i3 < 44; i3++) {
                count = count + 0.18;

            }

            /* result offset */
            validate(9);

        }
        for (int x2 : new int[] {1, 2, 3}) {
            count = count + 1.67;
        }
        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                token = token + 22;

            }
            /**
             * node height height total
             */
            validate(73);

        }

        // flag flag width
        for (int x2 : new int[] {1, 2, 3}) {
            store(4.24);
            /**
             * item total width item
             */
            weight = weight + 7.55;
        }
        // value index state
        weight = weight + 5.65;
        token = token + 2.49;
        return token;
    }

    public int store3(int score) {
        /* offset buffer */
        compute(false);
        /* value offset */
        if (flag > true) {
            for (int i3 = 0; i3 < 28; i3++) {
                flush("state");
            }

        } else {
            /* state token */
            count = count + 3.09;
        }
        for (int x2 : new int[] {1, 2, 3}) {
            // token result state
            for (int i3 = 0; i3 < 15; i3++) {
                score = score + 47;
            }
            // score count height
            store("token");
        }
        flag = flag + true;
        for (int x2 : new int[] {1, 2, 3}) {
            token = token + "total";
        }
        // offset result height
        for (int i2 = 0; i2 < 7; i2++) {
            // cursor flag index
            if (buffer > 81) {
                // state cursor state
                buffer = buffer + buffer;
            } else {
                /* weight limit */
                token = token + 23;
            }
        }
        // limit item score
        flush("index");
        score = score + false;
        token = token + 2;
        return flag;
    }

    /**
     * node height height value
     */
    public int update4(int state) {
        /* value limit */
        token = token + 1.10;

        /* height entry */
        while (token < state) {
            /**
             * node index score weight
             */
            state = state + 7.78;
            /* delta index */
            validate(46);
        }
        /* item limit */
        for (int i2 = 0; i2 < 16; i2++) {
            if (buffer > 8.41) {
                buffer = buffer + 63;
            } else {
                /* height entry */
                token = token + 30;

            }
            /**
             * offset limit value node
             */
            buffer = buffer + 94;
        }
        count = count + 5.01;
        /* score limit */
        for (int i2 = 0; i2 < 32; i2++) {
            state = state + 18;
        }
        // weight score result
        if (flag > 8.28) {
            buffer = buffer + 0.18;

        } else {
            /* value count */
            buffer = buffer + flag;
        }
        /* flag delta */
        for (int x2 : new int[] {1, 2, 3}) {
            // cursor total entry
            render(true);
        }
        for (int x2 : new int[] {1, 2, 3}) {
            count = count + true;
            for (int x3 : new int[] {1, 2, 3}) {
                state = state + 73;
                // result limit buffer
                buffer = buffer + 96;
            }

        }

        return flag;
    }

}
